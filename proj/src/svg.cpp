#include "doublet/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace doublet {

namespace {

constexpr const char* kStroke[3] = {"#1f77b4", "#d62728", "#2ca02c"};

void num(std::string& out, double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[32];
  const std::to_chars_result r = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, r.ptr);
}

struct Box {
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  void grow(double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
};

std::string document(const Box& b, const std::string& body) {
  const double pad = 0.1 * std::max(b.x1 - b.x0, b.y1 - b.y0);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  num(out, b.x0 - pad);
  out += ' ';
  num(out, b.y0 - pad);
  out += ' ';
  num(out, b.x1 - b.x0 + 2.0 * pad);
  out += ' ';
  num(out, b.y1 - b.y0 + 2.0 * pad);
  out += "\" width=\"480\" height=\"480\" preserveAspectRatio=\"xMidYMid\">\n";
  out += body;
  out += "</svg>\n";
  return out;
}

void stroke_attrs(std::string& out, int k, double scale) {
  out += "\" fill=\"none\" stroke=\"";
  out += kStroke[k - 1];
  out += "\" stroke-width=\"";
  num(out, 0.01 * scale);
  out += "\"/>\n";
}

}  // namespace

std::string render_svg(const DoubletState& st) {
  // World axis along x, junction points at (0, +-h); svg y points down so
  // world (X, Y) maps to (X, -Y).
  const double h = st.h();
  Box bb;
  bb.grow(0.0, -h);
  bb.grow(0.0, h);
  const auto flat = [&](int k) { return std::fabs(st.z(k)) < 1e-12; };
  for (int k = 1; k <= 3; ++k) {
    const double xk = st.x(k);
    bb.grow(xk, 0.0);
    if (!flat(k) && std::fabs(xk) > h) {
      // past a hemisphere the arc reaches the full radial extent
      const double R = (xk * xk + h * h) / (2.0 * std::fabs(xk));
      const double ck = (xk * xk - h * h) / (2.0 * xk);
      bb.grow(ck - R, -R);
      bb.grow(ck + R, R);
    }
  }
  const double scale = std::max(bb.x1 - bb.x0, bb.y1 - bb.y0);

  std::string body;
  for (int k = 1; k <= 3; ++k) {
    const double xk = st.x(k);
    body += "<path d=\"M 0 ";
    num(body, h);
    if (flat(k)) {
      body += " L 0 ";
      num(body, -h);
    } else {
      const double R = (xk * xk + h * h) / (2.0 * std::fabs(xk));
      body += " A ";
      num(body, R);
      body += ' ';
      num(body, R);
      body += " 0 ";
      body += char('0' + (std::fabs(xk) > h ? 1 : 0));  // large-arc flag
      body += ' ';
      body += char('0' + (xk > 0.0 ? 0 : 1));           // sweep flag
      body += " 0 ";
      num(body, -h);
    }
    stroke_attrs(body, k, scale);
  }

  for (double sy : {h, -h}) {
    body += "<circle cx=\"0\" cy=\"";
    num(body, sy);
    body += "\" r=\"";
    num(body, 0.02 * scale);
    body += "\" fill=\"#000\"/>\n";
  }
  return document(bb, body);
}

std::string render_svg(const BoundaryState& bs) {
  const double xs[3] = {bs.x1, bs.x2, bs.x3};
  Box bb;
  for (double x : xs) {
    if (x == 0.0) continue;
    bb.grow(x, std::fabs(x) / 2.0);
    bb.grow(0.0, -std::fabs(x) / 2.0);
  }
  const double scale = std::max(bb.x1 - bb.x0, bb.y1 - bb.y0);

  std::string body;
  for (int k = 1; k <= 3; ++k) {
    const double x = xs[k - 1];
    if (x == 0.0) continue;
    body += "<circle cx=\"";
    num(body, x / 2.0);
    body += "\" cy=\"0\" r=\"";
    num(body, std::fabs(x) / 2.0);
    stroke_attrs(body, k, scale);
  }
  return document(bb, body);
}

}  // namespace doublet
