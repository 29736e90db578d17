#include "barygeo/svg.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "barygeo/checks.hpp"
#include "barygeo/checks_inversion.hpp"

namespace barygeo {

namespace {

struct Pt {
    double x, y;
};

double to_d(const Rat& v) { return v.get_d(); }

Pt to_pt(const CartesianPoint<Rat>& p) { return {to_d(p.x), to_d(p.y)}; }

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// Fixed viewport normalized to the triangle bounding box with a 10% margin;
// the y axis is flipped into screen coordinates.
class Canvas {
public:
    Canvas(Pt lo, Pt hi, int width_px) {
        double margin_x = 0.1 * (hi.x - lo.x);
        double margin_y = 0.1 * (hi.y - lo.y);
        lo_ = {lo.x - margin_x, lo.y - margin_y};
        hi_ = {hi.x + margin_x, hi.y + margin_y};
        scale_ = width_px / (hi_.x - lo_.x);
        width_ = width_px;
        height_ = static_cast<int>((hi_.y - lo_.y) * scale_) + 1;
    }

    Pt map(Pt w) const { return {(w.x - lo_.x) * scale_, (hi_.y - w.y) * scale_}; }

    bool roughly_inside(Pt w, double slack = 4.0) const {
        double dx = (hi_.x - lo_.x) * slack, dy = (hi_.y - lo_.y) * slack;
        return w.x > lo_.x - dx && w.x < hi_.x + dx && w.y > lo_.y - dy && w.y < hi_.y + dy;
    }

    void segment(Pt a, Pt b, const std::string& stroke, double width = 1.0,
                 const std::string& dash = "") {
        Pt ma = map(a), mb = map(b);
        body_ += "<line x1=\"" + fmt(ma.x) + "\" y1=\"" + fmt(ma.y) + "\" x2=\"" + fmt(mb.x) +
                 "\" y2=\"" + fmt(mb.y) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
                 fmt(width) + "\"";
        if (!dash.empty()) body_ += " stroke-dasharray=\"" + dash + "\"";
        body_ += " />\n";
    }

    // Full line a*x + b*y = c clipped to the viewport rectangle.
    void line(double a, double b, double c, const std::string& stroke, double width = 1.0,
              const std::string& dash = "") {
        std::vector<Pt> hits;
        auto push = [&](double x, double y) {
            for (const Pt& h : hits)
                if (std::abs(h.x - x) < 1e-12 && std::abs(h.y - y) < 1e-12) return;
            if (x >= lo_.x - 1e-9 && x <= hi_.x + 1e-9 && y >= lo_.y - 1e-9 && y <= hi_.y + 1e-9)
                hits.push_back({x, y});
        };
        if (std::abs(b) > 1e-15) {
            push(lo_.x, (c - a * lo_.x) / b);
            push(hi_.x, (c - a * hi_.x) / b);
        }
        if (std::abs(a) > 1e-15) {
            push((c - b * lo_.y) / a, lo_.y);
            push((c - b * hi_.y) / a, hi_.y);
        }
        if (hits.size() >= 2) segment(hits[0], hits[1], stroke, width, dash);
    }

    void circle(Pt center, double radius, const std::string& stroke, double width = 1.0) {
        Pt mc = map(center);
        body_ += "<circle cx=\"" + fmt(mc.x) + "\" cy=\"" + fmt(mc.y) + "\" r=\"" +
                 fmt(radius * scale_) + "\" fill=\"none\" stroke=\"" + stroke +
                 "\" stroke-width=\"" + fmt(width) + "\" />\n";
    }

    void polyline(const std::vector<Pt>& pts, const std::string& stroke, double width = 1.0) {
        double max_jump2 = (hi_.x - lo_.x) * (hi_.x - lo_.x) + (hi_.y - lo_.y) * (hi_.y - lo_.y);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            double dx = pts[i].x - pts[i - 1].x, dy = pts[i].y - pts[i - 1].y;
            if (dx * dx + dy * dy > max_jump2) continue;
            if (!roughly_inside(pts[i], 1.2) && !roughly_inside(pts[i - 1], 1.2)) continue;
            segment(pts[i - 1], pts[i], stroke, width);
        }
    }

    void point(Pt p, const std::string& label, const std::string& fill = "black") {
        Pt mp = map(p);
        body_ += "<circle cx=\"" + fmt(mp.x) + "\" cy=\"" + fmt(mp.y) +
                 "\" r=\"3\" fill=\"" + fill + "\" />\n";
        body_ += "<text x=\"" + fmt(mp.x + 5) + "\" y=\"" + fmt(mp.y - 5) +
                 "\" font-size=\"14\" font-family=\"sans-serif\">" + label + "</text>\n";
    }

    std::string str() const {
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_) +
               "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " +
               std::to_string(width_) + " " + std::to_string(height_) + "\">\n";
        out += "<rect width=\"100%\" height=\"100%\" fill=\"white\" />\n";
        out += body_;
        out += "</svg>\n";
        return out;
    }

private:
    Pt lo_{}, hi_{};
    double scale_ = 1.0;
    int width_ = 0, height_ = 0;
    std::string body_;
};

struct Scene {
    TriangleMetric<Rat> tri;
    Canvas canvas;

    explicit Scene(const std::array<Rat, 3>& sides)
        : tri(TriangleMetric<Rat>::from_sides(sides[0], sides[1], sides[2])),
          canvas(make_canvas(tri)) {}

    static Canvas make_canvas(const TriangleMetric<Rat>& t) {
        Pt a = to_pt(t.vertexA()), b = to_pt(t.vertexB()), c = to_pt(t.vertexC());
        Pt lo{std::min({a.x, b.x, c.x}), std::min({a.y, b.y, c.y})};
        Pt hi{std::max({a.x, b.x, c.x}), std::max({a.y, b.y, c.y})};
        return Canvas(lo, hi, 800);
    }

    void draw_triangle() {
        Pt a = to_pt(tri.vertexA()), b = to_pt(tri.vertexB()), c = to_pt(tri.vertexC());
        canvas.segment(a, b, "black", 1.5);
        canvas.segment(b, c, "black", 1.5);
        canvas.segment(c, a, "black", 1.5);
        canvas.point(a, "A");
        canvas.point(b, "B");
        canvas.point(c, "C");
    }

    void draw_circle(const Circle<Rat>& c, const std::string& stroke, double width = 1.0) {
        if (c.is_degenerate_line()) {
            draw_hline(c.line(), stroke, width, "6,4");
            return;
        }
        CCircle<Rat> cc = to_cartesian_circle(tri, c);
        double r2 = to_d(cc.r2);
        if (r2 <= 0) return;
        canvas.circle(to_pt(cc.center), std::sqrt(r2), stroke, width);
    }

    void draw_ccircle(const CCircle<Rat>& cc, const std::string& stroke, double width = 1.0) {
        double r2 = to_d(cc.r2);
        if (r2 <= 0) return;
        canvas.circle(to_pt(cc.center), std::sqrt(r2), stroke, width);
    }

    void draw_hline(const HLine<Rat>& l, const std::string& stroke, double width = 1.0,
                    const std::string& dash = "") {
        CartLine<Rat> cl = tri.to_cart_line(l);
        canvas.line(to_d(cl.a), to_d(cl.b), to_d(cl.c), stroke, width, dash);
    }

    void draw_point(const HPoint<Rat>& p, const std::string& label, const std::string& fill) {
        if (is_infinite(p)) return;
        canvas.point(to_pt(tri.to_cartesian(p)), label, fill);
    }

    // Circumconic polyline: 256 pencil lines through A, sampled in floats.
    void draw_conic(const Conic<Rat>& k, const std::string& stroke) {
        QuadForm<double> qf = QuadForm<double>::from_conic(
            Conic<double>{to_d(k.lambda), to_d(k.mu), to_d(k.nu)});
        HPoint<double> a{1.0, 0.0, 0.0};
        auto tf = TriangleMetric<double>::from_sides(to_d(tri.a()), to_d(tri.b()), to_d(tri.c()));
        std::vector<Pt> pts;
        const int n = 256;
        for (int i = 0; i < n; ++i) {
            double tau = std::tan(M_PI * (i + 0.5) / n - M_PI / 2);
            HLine<double> l{0.0, -tau, 1.0};
            HPoint<double> second;
            try {
                second = quad_line_second_intersection(qf, l, a);
                CartesianPoint<double> cp = tf.to_cartesian(second);
                pts.push_back({cp.x, cp.y});
            } catch (const geometry_error&) {
                pts.push_back({1e30, 1e30});
            }
        }
        canvas.polyline(pts, stroke, 1.2);
    }
};

std::string figure_theorem5(Scene& sc, const HPoint<Rat>& q) {
    const TriangleMetric<Rat>& t = sc.tri;
    sc.draw_circle(circumcircle(t), "#bbbbbb");
    HPoint<Rat> incenter = named_center(t, CenterId::I);
    Conic<Rat> conic = circumconic_from_line(t, join(incenter, named_center(t, CenterId::G)));
    sc.draw_conic(conic, "#2266cc");
    TheoremCircles<Rat> tc = theorem_circles(t, incenter, q);
    for (int i = 0; i < 3; ++i) sc.draw_circle(tc.circles[i], "#cc4422");
    try {
        PencilVerdict<Rat> verdict = coaxal(tc.circles[0], tc.circles[1], tc.circles[2]);
        if (verdict.coaxal && verdict.common_radical_axis)
            sc.draw_hline(*verdict.common_radical_axis, "#118833", 1.2, "8,4");
    } catch (const geometry_error&) {
        // coincident circles: nothing to draw for the axis
    }
    sc.draw_triangle();
    sc.draw_point(incenter, "I", "#555555");
    sc.draw_point(q, "Q", "#cc4422");
    sc.draw_point(named_center(t, CenterId::X58), "X58", "#118833");
    return sc.canvas.str();
}

std::string figure_lemma6(Scene& sc) {
    const TriangleMetric<Rat>& t = sc.tri;
    sc.draw_circle(circumcircle(t), "#bbbbbb");
    HPoint<Rat> x56 = named_center(t, CenterId::X56);
    auto cc = circumcevian_triangle(t, x56);
    std::array<HPoint<Rat>, 3> arcs{named_center(t, CenterId::Mprime),
                                    named_center(t, CenterId::Nprime),
                                    named_center(t, CenterId::Pprime)};
    BisectorFeet<Rat> feet = bisector_feet(t);
    std::array<HPoint<Rat>, 3> traces{feet.X, feet.Y, feet.Z};
    std::array<HPoint<Rat>, 3> uvw;
    for (int i = 0; i < 3; ++i) {
        Circle<Rat> c1 = circle_through_3(t, cc[i], arcs[i], traces[i]);
        Circle<Rat> c2 = circle_through_3(t, cc[(i + 1) % 3], cc[(i + 2) % 3], traces[i]);
        sc.draw_circle(c1, "#cc4422");
        sc.draw_circle(c2, "#dd8833");
        uvw[i] = meet(radical_axis(c1, circumcircle(t)), radical_axis(c2, circumcircle(t)));
    }
    sc.draw_hline(join(uvw[0], uvw[1]), "#118833", 1.2, "8,4");
    sc.draw_triangle();
    sc.draw_point(uvw[0], "U", "#118833");
    sc.draw_point(uvw[1], "V", "#118833");
    sc.draw_point(uvw[2], "W", "#118833");
    sc.draw_point(x56, "X56", "#cc4422");
    return sc.canvas.str();
}

std::string figure_inversion(Scene& sc) {
    const TriangleMetric<Rat>& t = sc.tri;
    Inversion<Rat> psi = incircle_inversion(t);
    sc.draw_circle(incircle(t), "#888888");
    std::array<HLine<Rat>, 3> sidelines{HLine<Rat>{Rat(1), Rat(0), Rat(0)},
                                        HLine<Rat>{Rat(0), Rat(1), Rat(0)},
                                        HLine<Rat>{Rat(0), Rat(0), Rat(1)}};
    for (const auto& l : sidelines)
        sc.draw_circle(invert_circle(t, psi, Circle<Rat>::degenerate_line(t, l)), "#2266cc");
    std::array<HPoint<Rat>, 3> verts{HPoint<Rat>{Rat(1), Rat(0), Rat(0)},
                                     HPoint<Rat>{Rat(0), Rat(1), Rat(0)},
                                     HPoint<Rat>{Rat(0), Rat(0), Rat(1)}};
    std::array<CartesianPoint<Rat>, 3> v1;
    for (int i = 0; i < 3; ++i) v1[i] = invert_point(psi, t.to_cartesian(verts[i]));
    for (int i = 0; i < 3; ++i)
        sc.canvas.segment(to_pt(v1[i]), to_pt(v1[(i + 1) % 3]), "#118833", 1.3);
    DerivedTriangle<Rat> dt(t, v1);
    sc.draw_ccircle(dt.circumcircle(), "#cc4422");
    sc.draw_triangle();
    sc.canvas.point(to_pt(v1[0]), "A1", "#118833");
    sc.canvas.point(to_pt(v1[1]), "B1", "#118833");
    sc.canvas.point(to_pt(v1[2]), "C1", "#118833");
    sc.draw_point(named_center(t, CenterId::I), "I", "#555555");
    return sc.canvas.str();
}

std::string figure_theorem7(Scene& sc, const HPoint<Rat>& p) {
    const TriangleMetric<Rat>& t = sc.tri;
    sc.draw_hline(euler_line(t), "#2266cc", 1.2, "8,4");
    auto feet = orthotransversal_points(t, p);
    sc.draw_hline(orthotransversal(t, p), "#dd8833", 1.2);
    std::array<CartesianPoint<Rat>, 3> verts{t.vertexA(), t.vertexB(), t.vertexC()};
    for (int i = 0; i < 3; ++i) {
        if (is_infinite(feet[i])) continue;
        CartesianPoint<Rat> center = t.to_cartesian(feet[i]);
        sc.draw_ccircle(CCircle<Rat>{center, distance2(center, verts[i])}, "#cc4422");
    }
    sc.draw_triangle();
    sc.draw_point(p, "P", "#cc4422");
    sc.draw_point(named_center(t, CenterId::O), "O", "#2266cc");
    sc.draw_point(named_center(t, CenterId::H), "H", "#2266cc");
    return sc.canvas.str();
}

std::string figure_theorem10(Scene& sc, const HPoint<Rat>& p, const HPoint<Rat>& q) {
    const TriangleMetric<Rat>& t = sc.tri;
    sc.draw_circle(circumcircle(t), "#bbbbbb");
    HPoint<Rat> r = isogonal_conjugate(t, complement(p));
    HLine<Rat> lstar = join(isogonal_conjugate(t, p), complement(p));
    bool through_vertex = false;
    for (const auto& v : {HPoint<Rat>{Rat(1), Rat(0), Rat(0)}, HPoint<Rat>{Rat(0), Rat(1), Rat(0)},
                          HPoint<Rat>{Rat(0), Rat(0), Rat(1)}})
        through_vertex = through_vertex || on_line(lstar, v);
    if (!through_vertex)
        sc.draw_conic(circumconic_from_line(t, lstar), "#2266cc");
    TheoremCircles<Rat> tc = theorem_circles(t, p, q);
    for (int i = 0; i < 3; ++i) sc.draw_circle(tc.circles[i], "#cc4422");
    try {
        PencilVerdict<Rat> verdict = coaxal(tc.circles[0], tc.circles[1], tc.circles[2]);
        if (verdict.coaxal && verdict.common_radical_axis)
            sc.draw_hline(*verdict.common_radical_axis, "#118833", 1.2, "8,4");
    } catch (const geometry_error&) {
        // coincident circles: nothing to draw for the axis
    }
    sc.draw_triangle();
    sc.draw_point(p, "P", "#555555");
    sc.draw_point(q, "Q", "#cc4422");
    sc.draw_point(r, "R", "#118833");
    return sc.canvas.str();
}

}  // namespace

std::string render_figure(const FigureRequest& req) {
    Scene sc(req.sides);
    const TriangleMetric<Rat>& t = sc.tri;
    HPoint<Rat> default_q = named_center(t, CenterId::K);
    if (req.figure_id == "theorem5") return figure_theorem5(sc, req.q.value_or(default_q));
    if (req.figure_id == "lemma6") return figure_lemma6(sc);
    if (req.figure_id == "inversion") return figure_inversion(sc);
    if (req.figure_id == "theorem7")
        return figure_theorem7(sc, req.p.value_or(named_center(t, CenterId::G)));
    if (req.figure_id == "theorem10")
        return figure_theorem10(sc, req.p.value_or(HPoint<Rat>{Rat(7), Rat(3), Rat(5)}),
                                req.q.value_or(default_q));
    throw geometry_error("unknown figure id: " + req.figure_id);
}

}  // namespace barygeo
