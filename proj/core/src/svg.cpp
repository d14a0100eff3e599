#include "chab/svg.hpp"

#include <cstdio>
#include <sstream>

namespace chab {

SvgWriter::SvgWriter(double width, double height) : width_(width), height_(height) {}

std::string SvgWriter::fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void SvgWriter::comment(const std::string& text) {
    body_ += "<!-- " + text + " -->\n";
}

void SvgWriter::circle(double cx, double cy, double r, const std::string& style) {
    body_ += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(r) +
             "\" style=\"" + style + "\"/>\n";
}

void SvgWriter::line(double x1, double y1, double x2, double y2, const std::string& style) {
    body_ += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
             "\" y2=\"" + fmt(y2) + "\" style=\"" + style + "\"/>\n";
}

void SvgWriter::polyline(const std::string& points, const std::string& style) {
    body_ += "<polyline points=\"" + points + "\" style=\"" + style + "\"/>\n";
}

void SvgWriter::path(const std::string& d, const std::string& style) {
    body_ += "<path d=\"" + d + "\" style=\"" + style + "\"/>\n";
}

void SvgWriter::rect(double x, double y, double w, double h, const std::string& style) {
    body_ += "<rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(w) +
             "\" height=\"" + fmt(h) + "\" style=\"" + style + "\"/>\n";
}

void SvgWriter::text(double x, double y, const std::string& content, const std::string& cls,
                     double font_size) {
    std::string escaped;
    for (char c : content) {
        switch (c) {
            case '&': escaped += "&amp;"; break;
            case '<': escaped += "&lt;"; break;
            case '>': escaped += "&gt;"; break;
            default: escaped += c;
        }
    }
    body_ += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\"";
    if (!cls.empty()) body_ += " class=\"" + cls + "\"";
    body_ += " font-size=\"" + fmt(font_size) + "\" font-family=\"monospace\">" + escaped +
             "</text>\n";
}

std::string SvgWriter::str() const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width_)
       << "\" height=\"" << fmt(height_) << "\" viewBox=\"0 0 " << fmt(width_) << " "
       << fmt(height_) << "\">\n"
       << body_ << "</svg>\n";
    return os.str();
}

}  // namespace chab
