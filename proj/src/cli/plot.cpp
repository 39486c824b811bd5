// Copyright 2026 The reachpipe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reachpipe/cli/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace reachpipe::cli {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 50.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

struct Rect {
  double x0, x1, y0, y1;
};

class Canvas {
 public:
  Canvas(double xmin, double xmax, double ymin, double ymax) {
    if (!(xmax > xmin)) {
      xmin -= 0.5;
      xmax += 0.5;
    }
    if (!(ymax > ymin)) {
      ymin -= 0.5;
      ymax += 0.5;
    }
    const double pad = 0.05 * (ymax - ymin);
    xmin_ = xmin;
    xmax_ = xmax;
    ymin_ = ymin - pad;
    ymax_ = ymax + pad;
  }

  double px(double x) const { return kLeft + (x - xmin_) / (xmax_ - xmin_) * (kWidth - kLeft - kRight); }
  double py(double y) const {
    return kHeight - kBottom - (y - ymin_) / (ymax_ - ymin_) * (kHeight - kTop - kBottom);
  }

  std::string header() const {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n"
           "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" fill=\"white\"/>\n";
  }

  std::string axes(const std::string& xlabel, const std::string& ylabel) const {
    std::string s = "<g stroke=\"black\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" +
         num(kWidth - kRight) + "\" y2=\"" + num(kHeight - kBottom) + "\"/>\n";
    s += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
         "\" y2=\"" + num(kHeight - kBottom) + "\"/>\n";
    for (int i = 0; i <= 5; ++i) {
      const double xv = xmin_ + (xmax_ - xmin_) * i / 5.0;
      const double yv = ymin_ + (ymax_ - ymin_) * i / 5.0;
      s += "<line x1=\"" + num(px(xv)) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" +
           num(px(xv)) + "\" y2=\"" + num(kHeight - kBottom + 5) + "\"/>\n";
      s += "<text stroke=\"none\" text-anchor=\"middle\" x=\"" + num(px(xv)) + "\" y=\"" +
           num(kHeight - kBottom + 18) + "\">" + label(xv) + "</text>\n";
      s += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py(yv)) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(py(yv)) + "\"/>\n";
      s += "<text stroke=\"none\" text-anchor=\"end\" x=\"" + num(kLeft - 8) + "\" y=\"" +
           num(py(yv) + 4) + "\">" + label(yv) + "</text>\n";
    }
    s += "<text stroke=\"none\" text-anchor=\"middle\" x=\"" + num(0.5 * (kLeft + kWidth - kRight)) +
         "\" y=\"" + num(kHeight - 10) + "\">" + xlabel + "</text>\n";
    s += "<text stroke=\"none\" text-anchor=\"middle\" transform=\"translate(15," +
         num(0.5 * (kTop + kHeight - kBottom)) + ") rotate(-90)\">" + ylabel + "</text>\n";
    s += "</g>\n";
    return s;
  }

 private:
  double xmin_, xmax_, ymin_, ymax_;
};

std::string axis_label(const std::string& name) { return is_time_axis(name) ? "t [s]" : name; }

}  // namespace

bool is_time_axis(const std::string& name) { return name == "t" || name == "time"; }

std::string flowpipe_svg(const Flowpipe& fp, const std::string& x, const std::string& y) {
  const auto ys = flowpipe_bounds(fp, y);
  std::vector<Rect> rects;
  rects.reserve(ys.size());
  if (is_time_axis(x)) {
    for (const auto& s : ys) rects.push_back({s.t_lo, s.t_hi, s.lo, s.hi});
  } else {
    const auto xs = flowpipe_bounds(fp, x);
    for (std::size_t k = 0; k < ys.size(); ++k) rects.push_back({xs[k].lo, xs[k].hi, ys[k].lo, ys[k].hi});
  }
  double xmin = rects.front().x0, xmax = rects.front().x1;
  double ymin = rects.front().y0, ymax = rects.front().y1;
  for (const auto& r : rects) {
    xmin = std::min(xmin, r.x0);
    xmax = std::max(xmax, r.x1);
    ymin = std::min(ymin, r.y0);
    ymax = std::max(ymax, r.y1);
  }
  const Canvas cv(xmin, xmax, ymin, ymax);
  std::string s = cv.header();
  s += "<g fill=\"#6a9fd4\" fill-opacity=\"0.6\" stroke=\"#1f4f85\" stroke-width=\"0.4\">\n";
  for (const auto& r : rects) {
    s += "<polygon points=\"" + num(cv.px(r.x0)) + "," + num(cv.py(r.y0)) + " " + num(cv.px(r.x1)) +
         "," + num(cv.py(r.y0)) + " " + num(cv.px(r.x1)) + "," + num(cv.py(r.y1)) + " " +
         num(cv.px(r.x0)) + "," + num(cv.py(r.y1)) + "\"/>\n";
  }
  s += "</g>\n";
  s += cv.axes(axis_label(x), axis_label(y));
  s += "</svg>\n";
  return s;
}

std::string trajectory_svg(const Trajectory& traj, const std::string& x, const std::string& y) {
  const std::size_t yi = traj.index_of(y);
  const bool time_x = is_time_axis(x);
  const std::size_t xi = time_x ? 0 : traj.index_of(x);
  auto xv = [&](std::size_t k) { return time_x ? traj.times[k] : traj.states[k][xi]; };
  double xmin = xv(0), xmax = xv(0), ymin = traj.states[0][yi], ymax = ymin;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    xmin = std::min(xmin, xv(k));
    xmax = std::max(xmax, xv(k));
    ymin = std::min(ymin, traj.states[k][yi]);
    ymax = std::max(ymax, traj.states[k][yi]);
  }
  const Canvas cv(xmin, xmax, ymin, ymax);
  std::string s = cv.header();
  s += "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    if (k) s += " ";
    s += num(cv.px(xv(k))) + "," + num(cv.py(traj.states[k][yi]));
  }
  s += "\"/>\n";
  s += cv.axes(axis_label(x), axis_label(y));
  s += "</svg>\n";
  return s;
}

}  // namespace reachpipe::cli
