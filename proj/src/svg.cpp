#include "tda/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tda/strip.hpp"

namespace tda {

namespace {

// ---- layout constants -----------------------------------------------------

constexpr double kWidth = 640;
constexpr double kMarginL = 56;
constexpr double kMarginR = 24;
constexpr double kMarginTop = 34;
constexpr double kRowH = 16;
constexpr double kAxisH = 36;
constexpr double kMarkerR = 3.5;

const char* kPalette[4] = {"#1f6feb", "#d29922", "#3fb950", "#db61a2"};

std::string fnum(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---- svg element helpers --------------------------------------------------

void put_line(std::string& s, double x1, double y1, double x2, double y2,
              const std::string& attrs) {
  s += "<line x1=\"" + fnum(x1) + "\" y1=\"" + fnum(y1) + "\" x2=\"" +
       fnum(x2) + "\" y2=\"" + fnum(y2) + "\" " + attrs + "/>\n";
}

void put_marker(std::string& s, double cx, double cy, bool filled,
                const char* color) {
  s += "<circle class=\"end\" cx=\"" + fnum(cx) + "\" cy=\"" + fnum(cy) +
       "\" r=\"" + fnum(kMarkerR) + "\" ";
  if (filled)
    s += std::string("fill=\"") + color + "\"";
  else
    s += std::string("fill=\"#ffffff\" stroke=\"") + color +
         "\" stroke-width=\"1.5\"";
  s += "/>\n";
}

void put_text(std::string& s, double x, double y, const std::string& txt,
              const char* anchor, const char* color) {
  s += "<text x=\"" + fnum(x) + "\" y=\"" + fnum(y) + "\" text-anchor=\"" +
       anchor + "\" fill=\"" + color + "\">" + txt + "</text>\n";
}

std::string svg_open(double height) {
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fnum(kWidth) +
       "\" height=\"" + fnum(height) + "\" viewBox=\"0 0 " + fnum(kWidth) +
       " " + fnum(height) +
       "\" font-family=\"Helvetica,Arial,sans-serif\" font-size=\"11\">\n";
  s += "<rect width=\"" + fnum(kWidth) + "\" height=\"" + fnum(height) +
       "\" fill=\"#ffffff\"/>\n";
  return s;
}

struct bar_row {
  int degree = 0;
  // Axis coordinates of the two ends plus whether each end gets a marker
  // (half-infinite ends run to the plot edge, no marker) and its fill.
  double x1 = 0, x2 = 0;
  bool mark1 = false, mark2 = false;
  bool fill1 = false, fill2 = false;
};

// Shared body: title line, per-degree bars, baseline with ticks.
std::string render_rows(const std::string& title,
                        const std::vector<bar_row>& rows,
                        const std::vector<std::pair<double, std::string>>& ticks,
                        double divider_x) {
  const double axis_y = kMarginTop + static_cast<double>(rows.size()) * kRowH + 10;
  const double height = axis_y + kAxisH - 10;
  std::string s = svg_open(height);
  put_text(s, 12, 16, title, "start", "#57606a");

  int last_degree = -1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bar_row& r = rows[i];
    const double y = kMarginTop + (static_cast<double>(i) + 0.5) * kRowH;
    const char* color = kPalette[((r.degree % 4) + 4) % 4];
    if (r.degree != last_degree) {
      put_text(s, 14, y + 4, "H" + std::to_string(r.degree), "start", "#24292f");
      last_degree = r.degree;
    }
    if (r.x2 > r.x1)
      put_line(s, r.x1, y, r.x2, y,
               std::string("class=\"bar\" stroke=\"") + color +
                   "\" stroke-width=\"4\"");
    if (r.mark1) put_marker(s, r.x1, y, r.fill1, color);
    if (r.mark2) put_marker(s, r.x2, y, r.fill2, color);
  }

  put_line(s, kMarginL, axis_y, kWidth - kMarginR, axis_y,
           "class=\"axis\" stroke=\"#57606a\" stroke-width=\"1\"");
  for (const auto& [x, label] : ticks) {
    put_line(s, x, axis_y, x, axis_y + 5,
             "class=\"tick\" stroke=\"#57606a\" stroke-width=\"1\"");
    put_text(s, x, axis_y + 18, label, "middle", "#57606a");
  }
  if (divider_x > 0)
    put_line(s, divider_x, kMarginTop - 12, divider_x, axis_y,
             "class=\"divider\" stroke=\"#8c959f\" stroke-width=\"1\" "
             "stroke-dasharray=\"3 4\"");

  s += "</svg>\n";
  return s;
}

// Evenly thin a tick list down to at most `cap` entries.
template <typename T>
std::vector<T> thin(std::vector<T> v, std::size_t cap) {
  if (v.size() <= cap) return v;
  std::vector<T> out;
  const std::size_t step = (v.size() + cap - 1) / cap;
  for (std::size_t i = 0; i < v.size(); i += step) out.push_back(v[i]);
  return out;
}

std::string render_graded(graded_barcode g) {
  g.canonicalize();

  // Value range: finite endpoints and critical values, padded by 5%.
  std::vector<double> vals = g.critical_values;
  for (const bar& b : g.entries) {
    if (std::isfinite(b.iv.lo)) vals.push_back(b.iv.lo);
    if (std::isfinite(b.iv.hi)) vals.push_back(b.iv.hi);
  }
  double lo = 0, hi = 1;
  if (!vals.empty()) {
    lo = *std::min_element(vals.begin(), vals.end());
    hi = *std::max_element(vals.begin(), vals.end());
  }
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  const double pw = kWidth - kMarginL - kMarginR;
  auto x_of = [&](double v) { return kMarginL + (v - lo) / (hi - lo) * pw; };

  std::vector<bar_row> rows;
  std::size_t total = 0;
  for (const bar& b : g.entries) total += static_cast<std::size_t>(b.mult);
  rows.reserve(total);
  for (const bar& b : g.entries)
    for (std::int64_t m = 0; m < b.mult; ++m) {
      bar_row r;
      r.degree = b.degree;
      r.mark1 = std::isfinite(b.iv.lo);
      r.mark2 = std::isfinite(b.iv.hi);
      r.x1 = r.mark1 ? x_of(b.iv.lo) : kMarginL;
      r.x2 = r.mark2 ? x_of(b.iv.hi) : kMarginL + pw;
      r.fill1 = b.iv.lo_closed;
      r.fill2 = b.iv.hi_closed;
      rows.push_back(r);
    }

  std::vector<double> tick_vals = g.critical_values;
  if (tick_vals.empty()) {
    tick_vals = vals;
    std::sort(tick_vals.begin(), tick_vals.end());
    tick_vals.erase(std::unique(tick_vals.begin(), tick_vals.end()),
                    tick_vals.end());
  }
  tick_vals = thin(std::move(tick_vals), 12);
  std::vector<std::pair<double, std::string>> ticks;
  for (double v : tick_vals) ticks.emplace_back(x_of(v), fnum(v));

  const std::string title = std::string(flavor_name(g.kind)) + " barcode, " +
                            std::to_string(total) + " bars";
  return render_rows(title, rows, ticks, -1);
}

std::string render_extended(ep_barcode e) {
  e.canonicalize();
  const std::size_t n = e.critical_values.size();

  // Traversal axis: up-sweep positions 1..n, down-sweep n+1..2n walks the
  // critical values in reverse.
  const double pw = kWidth - kMarginL - kMarginR;
  auto x_of = [&](std::size_t pos) {
    if (n <= 0 || 2 * n == 1) return kMarginL + pw / 2;
    return kMarginL +
           (static_cast<double>(pos) - 1) / (2 * static_cast<double>(n) - 1) * pw;
  };

  std::vector<bar_row> rows;
  std::size_t total = 0;
  for (const ep_entry& en : e.entries) total += static_cast<std::size_t>(en.mult);
  rows.reserve(total);
  for (const ep_entry& en : e.entries) {
    const ep_interval& v = en.itv;
    std::size_t pl = 0, pr = 0;
    bool lc = false, rc = false;
    switch (v.type) {
      case ep_type::ord:
        pl = static_cast<std::size_t>(v.i);
        pr = static_cast<std::size_t>(v.j);
        lc = true;
        rc = false;
        break;
      case ep_type::rel:
        pl = 2 * n + 1 - static_cast<std::size_t>(v.j);
        pr = 2 * n + 1 - static_cast<std::size_t>(v.i);
        lc = true;
        rc = false;
        break;
      case ep_type::ext_plus:
        pl = static_cast<std::size_t>(v.i);
        pr = 2 * n + 1 - static_cast<std::size_t>(v.j);
        lc = rc = true;
        break;
      case ep_type::ext_minus:
        pl = static_cast<std::size_t>(v.i);
        pr = 2 * n + 1 - static_cast<std::size_t>(v.j);
        lc = rc = false;
        break;
    }
    for (std::int64_t m = 0; m < en.mult; ++m) {
      bar_row r;
      r.degree = v.degree;
      r.x1 = x_of(pl);
      r.x2 = x_of(pr);
      r.mark1 = r.mark2 = true;
      r.fill1 = lc;
      r.fill2 = rc;
      rows.push_back(r);
    }
  }

  std::vector<std::size_t> tick_pos;
  for (std::size_t p = 1; p <= 2 * n; ++p) tick_pos.push_back(p);
  tick_pos = thin(std::move(tick_pos), 16);
  std::vector<std::pair<double, std::string>> ticks;
  for (std::size_t p : tick_pos) {
    std::string label = p <= n ? fnum(e.critical_values[p - 1])
                               : fnum(e.critical_values[2 * n - p]) + "'";
    ticks.emplace_back(x_of(p), label);
  }

  const double divider = n >= 1 ? (x_of(n) + x_of(n + 1)) / 2 : -1;
  const std::string title =
      "extended barcode, " + std::to_string(total) + " bars";
  return render_rows(title, rows, ticks, divider);
}

}  // namespace

std::string render_svg(const barcode_file& b) {
  switch (b.kind) {
    case flavor::blocks:
      fail(errc::unsupported_conversion,
           "blocks barcodes describe planar regions, not intervals; no plot");
    case flavor::extended:
      return render_extended(b.extended);
    case flavor::strip:
      return render_graded(strip_to_lzz(b.strip));
    default:
      return render_graded(b.graded);
  }
}

}  // namespace tda
