#pragma once

#include <string>

namespace chab {

/// Minimal SVG assembler. Output is deterministic: fixed attribute
/// order, fixed "%.6g" coordinate formatting, and a single version
/// comment line as the only non-content line.
class SvgWriter {
public:
    SvgWriter(double width, double height);

    void comment(const std::string& text);
    void circle(double cx, double cy, double r, const std::string& style);
    void line(double x1, double y1, double x2, double y2, const std::string& style);
    void polyline(const std::string& points, const std::string& style);
    void path(const std::string& d, const std::string& style);
    void rect(double x, double y, double w, double h, const std::string& style);
    /// `cls` becomes the element's class attribute (labels are located by
    /// class in tests); empty means no class.
    void text(double x, double y, const std::string& content, const std::string& cls,
              double font_size = 12.0);

    std::string str() const;

    static std::string fmt(double v);

private:
    std::string body_;
    double width_;
    double height_;
};

}  // namespace chab
