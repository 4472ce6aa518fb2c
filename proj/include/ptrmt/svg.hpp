// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>

namespace ptrmt {

/// Minimal SVG 1.1 document builder: rectangles, polylines, lines, text.
/// Output bytes are a pure function of the calls made (fixed "%.8g" number
/// formatting), so plots are diffable and reproducible.
class SvgCanvas {
  public:
    SvgCanvas(double width, double height);

    void rect(double x, double y, double w, double h, const std::string& fill);
    void line(double x1, double y1, double x2, double y2,
              const std::string& stroke, double stroke_width = 1.0);
    void polyline(std::span<const double> xs, std::span<const double> ys,
                  const std::string& stroke, double stroke_width = 1.5);
    void text(double x, double y, const std::string& s, double font_size = 12.0,
              const std::string& anchor = "start");

    /// Complete self-contained document.
    std::string str() const;

  private:
    double width_, height_;
    std::string body_;
};

}  // namespace ptrmt
