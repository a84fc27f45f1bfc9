#include "jetfront/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace jetfront {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

const char* kPalette[] = {"#1f6fb2", "#c23b22", "#2e8b57", "#8a2be2",
                          "#b8860b", "#d4508f", "#008b8b", "#555555"};

}  // namespace

std::string render_svg(const FrontDiagram& d, const RenderOptions& opt) {
  Trace tr = trace_components(d);
  const int ne = static_cast<int>(d.events.size());
  int max_strands = 0;
  for (int c = 0; c <= ne; ++c) max_strands = std::max(max_strands, tr.strand_count(c));
  const double width = 2 * opt.margin + (ne + 1) * opt.column_width;
  const double height = 2 * opt.margin + (std::max(max_strands, 1) + 1) * opt.row_height;
  const double g = opt.column_width * 0.3;  // connector half-width at event boundaries
  auto xcol = [&](int col) { return opt.margin + col * opt.column_width; };
  auto ypos = [&](int pos) { return height - opt.margin - pos * opt.row_height; };

  // boundary x of the event between column k and k+1
  auto xev = [&](int k) { return xcol(k + 1); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int comp = 0; comp < tr.component_count(); ++comp) {
    std::vector<SegmentRef> segs = tr.segments_of(comp);
    if (segs.empty()) continue;
    // walk the component cycle starting from its first listed segment
    std::string path;
    SegmentRef start = segs.front();
    SegmentRef cur = start;
    int dir = tr.direction_of(cur);
    bool pen_down = false;
    auto left_x = [&](SegmentRef s) { return s.column == 0 ? xcol(0) : xcol(s.column) + g; };
    auto right_x = [&](SegmentRef s) {
      return s.column == ne ? xcol(ne + 1) : xcol(s.column + 1) - g;
    };
    auto move_to = [&](double x, double y) {
      path += "M" + num(x) + " " + num(y) + " ";
      pen_down = true;
    };
    auto line_to = [&](double x, double y) { path += "L" + num(x) + " " + num(y) + " "; };
    size_t steps = 0;
    do {
      double y = ypos(cur.position);
      double xa = dir > 0 ? left_x(cur) : right_x(cur);
      double xb = dir > 0 ? right_x(cur) : left_x(cur);
      if (!pen_down) move_to(xa, y);
      line_to(xb, y);

      // find the next segment through the boundary the walk exits
      int exit_col = dir > 0 ? cur.column + 1 : cur.column;  // boundary index, 0..ne+1
      SegmentRef next{};
      int next_dir = dir;
      if (exit_col == 0 || exit_col == ne + 1) {
        // glue line: jump across x = 0
        next = {exit_col == 0 ? ne : 0, cur.position};
        pen_down = false;
      } else {
        int k = exit_col - 1;  // event index at this boundary
        const Event& e = d.events[k];
        int from = cur.position;
        bool entering_from_left = dir > 0;
        if (e.kind == EventKind::Crossing) {
          int i = e.position;
          int to = (from == i) ? i + 1 : (from == i + 1) ? i : from;
          next = {entering_from_left ? k + 1 : k, to};
          double yn = ypos(to);
          double xn = entering_from_left ? left_x(next) : right_x(next);
          // the strand ascending in z as x grows is behind; break its stroke
          int left_pos = entering_from_left ? from : to;
          int right_pos = entering_from_left ? to : from;
          bool under = (from == i || from == i + 1) && right_pos > left_pos;
          if (under) {
            line_to(xb + (xn - xb) * 0.35, y + (yn - y) * 0.35);
            move_to(xb + (xn - xb) * 0.65, y + (yn - y) * 0.65);
          }
          line_to(xn, yn);
        } else if (e.kind == EventKind::LeftCusp) {
          int i = e.position;
          if (entering_from_left) {
            // passing strand shifts over the insertion
            int to = from < i ? from : from + 2;
            next = {k + 1, to};
            line_to(left_x(next), ypos(to));
          } else if (cur.column == k + 1 && (from == i || from == i + 1)) {
            // through the cusp point onto the other branch
            int to = from == i ? i + 1 : i;
            next = {k + 1, to};
            next_dir = +1;
            double apex_x = xev(k) - g * 0.4;
            double apex_y = (ypos(i) + ypos(i + 1)) / 2.0;
            path += "Q" + num(apex_x) + " " + num(y) + " " + num(apex_x) + " " + num(apex_y) + " ";
            path += "Q" + num(apex_x) + " " + num(ypos(to)) + " " + num(left_x(next)) + " " +
                    num(ypos(to)) + " ";
          } else {
            int to = from < i ? from : from - 2;
            next = {k, to};
            line_to(right_x(next), ypos(to));
          }
        } else {  // RightCusp
          int i = e.position;
          if (!entering_from_left) {
            int to = from < i ? from : from + 2;
            next = {k, to};
            line_to(right_x(next), ypos(to));
          } else if (cur.column == k && (from == i || from == i + 1)) {
            int to = from == i ? i + 1 : i;
            next = {k, to};
            next_dir = -1;
            double apex_x = xev(k) + g * 0.4;
            double apex_y = (ypos(i) + ypos(i + 1)) / 2.0;
            path += "Q" + num(apex_x) + " " + num(y) + " " + num(apex_x) + " " + num(apex_y) + " ";
            path += "Q" + num(apex_x) + " " + num(ypos(to)) + " " + num(right_x(next)) + " " +
                    num(ypos(to)) + " ";
          } else {
            int to = from < i ? from : from - 2;
            next = {k + 1, to};
            line_to(left_x(next), ypos(to));
          }
        }
      }
      cur = next;
      dir = next_dir;
      ++steps;
    } while (!(cur == start) && steps < segs.size() * 4 + 8);
    svg << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << kPalette[comp % 8]
        << "\" stroke-width=\"" << num(opt.stroke_width) << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace jetfront
