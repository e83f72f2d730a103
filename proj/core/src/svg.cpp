#include "ietflip/svg.hpp"

#include <sstream>

namespace ietflip {

namespace {

constexpr int kPanel = 220;
constexpr int kMargin = 20;
constexpr int kGap = 24;

struct Segment {
  Scalar x0, y0, x1, y1;  // unit-square coordinates, endpoints may be exactly 1
};

// drawn height of a one-sided limit: raw value, except that a limit reached
// from below at 0 is drawn at the top edge
Scalar drawn_limit(const Branch& b, const CirclePoint& x, bool from_left) {
  Scalar raw = b.apply(x).value();
  bool from_below = (b.eps > 0) == from_left;
  if (from_below && raw.is_zero()) return Scalar(1);
  return raw;
}

void branch_segments(const Branch& b, std::vector<Segment>& out) {
  // cut the domain where it passes 0 and where the image passes 0
  std::vector<CirclePoint> cuts;
  CirclePoint lo = b.dom.is_full() ? CirclePoint() : b.dom.lo();
  Scalar len = b.dom.length();
  cuts.push_back(lo);
  if (b.dom.contains_open(CirclePoint())) cuts.push_back(CirclePoint());
  CirclePoint zero_pre = b.eps > 0 ? -b.t : b.t;
  if (b.dom.contains_open(zero_pre)) cuts.push_back(zero_pre);
  std::sort(cuts.begin(), cuts.end(), [&lo](const CirclePoint& p, const CirclePoint& q) {
    return forward_len(lo, p).cmp(forward_len(lo, q)) < 0;
  });

  for (std::size_t i = 0; i < cuts.size(); ++i) {
    Scalar off = forward_len(lo, cuts[i]);
    Scalar piece = (i + 1 < cuts.size() ? forward_len(lo, cuts[i + 1]) : len) - off;
    Scalar x0 = cuts[i].value();
    Scalar x1 = x0 + piece;  // may be exactly 1
    Scalar y0 = drawn_limit(b, cuts[i], /*from_left=*/false);
    Scalar y1 = b.eps > 0 ? y0 + piece : y0 - piece;
    out.push_back(Segment{x0, y0, x1, y1});
  }
}

std::string px(const Scalar& unit, int origin) {
  Scalar v = Scalar(origin) + unit * Scalar(kPanel);
  return v.decimal(3);
}

}  // namespace

std::string plot_svg(const std::vector<PlotItem>& panels) {
  if (panels.empty() || panels.size() > 8) {
    throw DomainError(Errc::precondition, "plot takes between 1 and 8 panels");
  }
  int n = static_cast<int>(panels.size());
  int width = 2 * kMargin + n * kPanel + (n - 1) * kGap;
  int height = 2 * kMargin + kPanel;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n";

  for (int i = 0; i < n; ++i) {
    const PlotItem& item = panels[static_cast<std::size_t>(i)];
    const MapClass& cls = std::holds_alternative<MapClass>(item)
                              ? std::get<MapClass>(item)
                              : std::get<Lift>(item).map_class();
    const Lift* lift = std::holds_alternative<Lift>(item) ? &std::get<Lift>(item) : nullptr;
    int ox = kMargin + i * (kPanel + kGap);
    int oy = kMargin;
    auto X = [&](const Scalar& v) { return px(v, ox); };
    auto Y = [&](const Scalar& v) { return px(Scalar(1) - v, oy); };

    svg << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << kPanel
        << "\" height=\"" << kPanel
        << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";

    std::vector<Segment> segs;
    for (const Branch& b : cls.branches()) branch_segments(b, segs);
    for (const Segment& s : segs) {
      svg << "<line x1=\"" << X(s.x0) << "\" y1=\"" << Y(s.y0) << "\" x2=\"" << X(s.x1)
          << "\" y2=\"" << Y(s.y1) << "\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    }

    for (const CirclePoint& bp : breakpoints(cls)) {
      const Branch& bl = cls.branch_left_at(bp);
      const Branch& br = cls.branch_right_at(bp);
      Scalar xl = bp.is_zero() ? Scalar(1) : bp.value();
      svg << "<circle cx=\"" << X(xl) << "\" cy=\"" << Y(drawn_limit(bl, bp, true))
          << "\" r=\"3\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"1\"/>\n";
      svg << "<circle cx=\"" << X(bp.value()) << "\" cy=\"" << Y(drawn_limit(br, bp, false))
          << "\" r=\"3\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"1\"/>\n";
    }

    if (lift) {
      for (const auto& [x, y] : lift->table()) {
        const Branch& bl = cls.branch_left_at(x);
        const Branch& br = cls.branch_right_at(x);
        // place the dot on the germ it selects
        Scalar xd = x.value(), yd = y.value();
        if (y == bl.apply(x)) {
          yd = drawn_limit(bl, x, true);
          if (x.is_zero()) xd = Scalar(1);
        } else if (y == br.apply(x)) {
          yd = drawn_limit(br, x, false);
        }
        svg << "<circle cx=\"" << X(xd) << "\" cy=\"" << Y(yd)
            << "\" r=\"3\" fill=\"#000\"/>\n";
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ietflip
