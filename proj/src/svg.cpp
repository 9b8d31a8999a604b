#include "scancover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

namespace scancover {

namespace {

constexpr double kPanel = 400.0;
constexpr double kMargin = 30.0;
constexpr double kTimelineX = 470.0;
constexpr double kTimelineWidth = 400.0;
constexpr double kRowHeight = 24.0;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string time_color(double t, double makespan) {
  const double frac = makespan > 0.0 ? std::clamp(t / makespan, 0.0, 1.0) : 0.0;
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << "hsl(" << 240.0 * (1.0 - frac) << ",70%,45%)";
  return os.str();
}

std::vector<std::pair<double, double>> layout(const Instance& instance) {
  const auto n = instance.vertex_count();
  std::vector<std::pair<double, double>> pts(n);
  if (instance.is_abstract()) {
    for (std::size_t v = 0; v < n; ++v) {
      const double a = 2.0 * std::numbers::pi * static_cast<double>(v) / std::max<std::size_t>(n, 1);
      pts[v] = {std::cos(a), std::sin(a)};
    }
  } else {
    for (std::size_t v = 0; v < n; ++v) {
      const Vec3 p = instance.position(static_cast<VertexIndex>(v));
      pts[v] = {p.x, p.y};
    }
  }
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;
  for (const auto& [x, y] : pts) {
    lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double scale = (kPanel - 2 * kMargin) / span;
  for (auto& [x, y] : pts) {
    const double px = kMargin + (x - lo_x) * scale + 0.5 * ((kPanel - 2 * kMargin) - (hi_x - lo_x) * scale);
    const double py = kMargin + (hi_y - y) * scale + 0.5 * ((kPanel - 2 * kMargin) - (hi_y - lo_y) * scale);
    x = px;
    y = py;
  }
  return pts;
}

}  // namespace

std::string render_svg(const Instance& instance, const ScanSchedule& schedule,
                       const std::optional<Trajectory>& trajectory) {
  const auto n = instance.vertex_count();
  const double makespan = schedule.makespan();
  const double horizon = makespan > 0.0 ? makespan : 1.0;
  const double height = std::max(kPanel, 60.0 + kRowHeight * static_cast<double>(n));
  const auto pts = layout(instance);

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kTimelineX + kTimelineWidth + 30
     << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  os << "<title>" << escape(schedule.algorithm_tag) << " makespan " << makespan << "</title>\n";

  os << "<g class=\"points\">\n";
  for (std::size_t e = 0; e < instance.edge_count(); ++e) {
    const Edge& ed = instance.edge(static_cast<EdgeIndex>(e));
    const double t = e < schedule.times.size() ? schedule.times[e] : 0.0;
    os << "<line class=\"edge\" x1=\"" << pts[ed.u].first << "\" y1=\"" << pts[ed.u].second
       << "\" x2=\"" << pts[ed.v].first << "\" y2=\"" << pts[ed.v].second << "\" stroke=\""
       << time_color(t, makespan) << "\" stroke-width=\"1.5\"><title>"
       << escape(instance.vertex(ed.u).id) << "-" << escape(instance.vertex(ed.v).id) << " t="
       << t << "</title></line>\n";
  }
  for (std::size_t v = 0; v < n; ++v) {
    os << "<circle class=\"vertex\" cx=\"" << pts[v].first << "\" cy=\"" << pts[v].second
       << "\" r=\"3\" fill=\"#222\"><title>" << escape(instance.vertex(static_cast<VertexIndex>(v)).id)
       << "</title></circle>\n";
  }
  os << "</g>\n";

  os << "<g class=\"timeline\">\n";
  os << "<text x=\"" << kTimelineX << "\" y=\"20\">time 0 to " << makespan << "</text>\n";
  const bool headings = trajectory && !instance.is_abstract() &&
                        instance.dimension() != Dimension::kThree &&
                        trajectory->paths.size() == n;
  for (std::size_t v = 0; v < n; ++v) {
    const auto vi = static_cast<VertexIndex>(v);
    const double top = 40.0 + kRowHeight * static_cast<double>(v);
    const double mid = top + kRowHeight / 2;
    os << "<g class=\"row\">\n";
    os << "<text x=\"" << kTimelineX - 6 << "\" y=\"" << mid + 3 << "\" text-anchor=\"end\">"
       << escape(instance.vertex(vi).id) << "</text>\n";
    os << "<line x1=\"" << kTimelineX << "\" y1=\"" << mid << "\" x2=\"" << kTimelineX + kTimelineWidth
       << "\" y2=\"" << mid << "\" stroke=\"#ccc\"/>\n";
    if (headings && !trajectory->paths[v].empty()) {
      // Heading in [0, 360) drawn across the row height; the line breaks at
      // the wrap-around.
      const auto& path = trajectory->paths[v];
      std::vector<std::pair<double, double>> samples;
      const int count = 120;
      for (int k = 0; k <= count; ++k) {
        const double t = horizon * k / count;
        samples.emplace_back(t, heading_degrees(heading_at(path, t)));
      }
      std::ostringstream line;
      line << std::fixed << std::setprecision(2);
      bool open = false;
      for (std::size_t k = 0; k < samples.size(); ++k) {
        if (k > 0 && std::abs(samples[k].second - samples[k - 1].second) > 180.0 && open) {
          line << "\"/>\n";
          open = false;
        }
        if (!open) {
          line << "<polyline class=\"heading\" fill=\"none\" stroke=\"#888\" points=\"";
          open = true;
        }
        line << kTimelineX + kTimelineWidth * samples[k].first / horizon << ","
             << top + kRowHeight - 2 - (kRowHeight - 4) * samples[k].second / 360.0 << " ";
      }
      if (open) line << "\"/>\n";
      os << line.str();
    }
    for (EdgeIndex e : instance.incident(vi)) {
      const double t = static_cast<std::size_t>(e) < schedule.times.size() ? schedule.times[e] : 0.0;
      os << "<rect class=\"scan\" x=\"" << kTimelineX + kTimelineWidth * t / horizon - 1.5
         << "\" y=\"" << top + 3 << "\" width=\"3\" height=\"" << kRowHeight - 6 << "\" fill=\""
         << time_color(t, makespan) << "\"><title>" << escape(instance.vertex(vi).id) << " scans "
         << escape(instance.vertex(instance.other(e, vi)).id) << " at " << t << "</title></rect>\n";
    }
    os << "</g>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace scancover
