#include "pfcy/formulas.hpp"

#include <stdexcept>

#include "pfcy/chow.hpp"

namespace pfcy {

std::int64_t chi_cy(std::int64_t d, std::int64_t m) { return m * d * (m * m - 1) / 6 + 7 * m; }

std::vector<mpq_class> chi_cy_polynomial(std::int64_t d) {
  mpq_class d6(static_cast<long>(d), 6);
  d6.canonicalize();
  return {0, mpq_class(7) - d6, 0, d6};
}

std::int64_t h_dot_c2(std::int64_t d) { return 84 - 2 * d; }

std::int64_t euler_dpf(std::int64_t d) { return -d * d + 49 * d - 588; }

DegreeWindow degree_window() {
  DegreeWindow w;
  w.lower = 11;
  std::int64_t upper = w.lower;
  while (h_dot_c2(upper + 1) >= 0) ++upper;
  // H.c_2 = 0 forces an etale quotient of an abelian threefold, chi_top = 0.
  while (h_dot_c2(upper) == 0 && euler_dpf(upper) != 0) {
    w.exclusions.push_back({upper, "H.c2 = 0 needs chi_top = 0, but -d^2+49d-588 = " + std::to_string(euler_dpf(upper))});
    --upper;
  }
  w.upper = upper;
  return w;
}

bool picard_rank_one_allows(std::int64_t d) { return euler_dpf(d) <= 2; }

mpq_class pushforward_c2_closed_form(const mpq_class& d) { return d * d / 2 - mpq_class(29, 2) * d + 108; }

std::vector<ClassificationSolution> solve_classification_equation(const std::string& kind, std::int64_t dmin,
                                                                  std::int64_t dmax) {
  std::vector<ClassificationSolution> out;
  if (kind == "smooth4quadric" || kind == "smooth5quadric") {
    const bool sym = kind == "smooth5quadric";
    for (std::int64_t d = dmin; d <= dmax; ++d) {
      ClassificationSolution s{d, {}, 0, kind};
      for (std::int64_t a = -kSolverRange; a <= kSolverRange; ++a) {
        if (sym && 2 * a != d) continue;
        if (2 * a * a - 2 * a * d + d * d - 13 * d + 84 == 0) s.a.push_back(a);
      }
      if (!s.a.empty()) out.push_back(s);
    }
    return out;
  }
  if (kind == "cone") {
    for (const mpq_class& b : {mpq_class(0), mpq_class(1, 2)})
      for (std::int64_t d = dmin; d <= dmax; ++d) {
        mpq_class a = mpq_class(static_cast<long>(d), 2) - b;
        a.canonicalize();
        if (a.get_den() != 1) continue;
        if ((a - 6) * (a - d + 7) != 0) continue;
        out.push_back({d, {a.get_num().get_si()}, b, b == 0 ? "b=0" : "b=1/2"});
      }
    return out;
  }
  if (kind == "fiber") {
    for (std::int64_t y = 1; y <= kSolverRange; ++y) {
      if (y * y == 10 * y - 24) out.push_back({y, {}, 0, "K3"});
      if (y * y == 10 * y) out.push_back({y, {}, 0, "abelian"});
    }
    return out;
  }
  throw std::invalid_argument("unknown equation kind '" + kind + "'");
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

FormulaCheck make(std::string name, std::string anchor, bool pass, std::string detail) {
  return {std::move(name), std::move(anchor), pass, std::move(detail)};
}

}  // namespace

std::vector<FormulaCheck> check_all_formulas() {
  std::vector<FormulaCheck> out;

  bool ok = true;
  for (std::int64_t d = 1; d <= 60; ++d) ok = ok && chi_cy(d, 0) == 0 && chi_cy(d, 1) == 7;
  out.push_back(make("chi_cy(d,0)=0, chi_cy(d,1)=7", "chi(O_X(m))=(1/6)md(m^2-1)+7m", ok, "d in [1,60]"));
  out.push_back(make("chi_cy(13,2)=27", "chi(O_X(2)) <= 27 < 28", chi_cy(13, 2) == 27, std::to_string(chi_cy(13, 2))));
  out.push_back(make("chi_cy(14,2)=28", "h^1(I_X(2))=h^0(I_X(2))", chi_cy(14, 2) == 28, std::to_string(chi_cy(14, 2))));
  ok = true;
  for (std::int64_t d = 1; d <= 60; ++d)
    for (std::int64_t m = -10; m <= 10; ++m) ok = ok && chi_cy(d, -m) == -chi_cy(d, m);
  out.push_back(make("chi_cy(d,-m) = -chi_cy(d,m)", "Serre duality", ok, "d in [1,60], m in [-10,10]"));

  out.push_back(make("euler_dpf(42) != 0", "-(42)^2+49*42-588 != 0", euler_dpf(42) == -294,
                     std::to_string(euler_dpf(42))));
  out.push_back(make("euler_dpf(14) = -98", "chi_top(X) = -d^2+49d-588", euler_dpf(14) == -98, std::to_string(euler_dpf(14))));
  ok = true;
  for (std::int64_t d = -100; d <= 100; ++d) ok = ok && euler_dpf(d) == euler_dpf(49 - d);
  out.push_back(make("euler_dpf(d) = euler_dpf(49-d)", "chi_top(X) = -d^2+49d-588", ok, "d in [-100,100]"));

  const DegreeWindow w = degree_window();
  out.push_back(make("degree window [11,41]", "bounded between 11 <= d <= 41",
                     w.lower == 11 && w.upper == 41 && w.exclusions.size() == 1 && w.exclusions[0].first == 42,
                     "[" + std::to_string(w.lower) + "," + std::to_string(w.upper) + "]"));
  ok = true;
  for (std::int64_t d = w.lower; d <= w.upper; ++d) ok = ok && picard_rank_one_allows(d) == (d <= 21 || d >= 28);
  out.push_back(make("Picard rank one: d <= 21 or d >= 28", "either d <= 21 or d >= 28",
                     ok && !picard_rank_one_allows(24) && euler_dpf(24) == 12, "euler_dpf(24) = " + std::to_string(euler_dpf(24))));

  {
    auto s = solve_classification_equation("smooth4quadric");
    std::string detail;
    bool pass = s.size() == 3 && s[0].d == 12 && s[0].a == std::vector<std::int64_t>{6} && s[1].d == 13 &&
                s[1].a == std::vector<std::int64_t>{6, 7} && s[2].d == 14 && s[2].a == std::vector<std::int64_t>{7};
    for (const auto& x : s) detail += std::to_string(x.d) + ":" + join(x.a) + " ";
    out.push_back(make("smooth 4-quadric: d in {12,13,14}", "The only integers d ... are d=12,13,14", pass, detail));
    auto t = solve_classification_equation("smooth5quadric");
    std::vector<std::int64_t> ds;
    for (const auto& x : t) ds.push_back(x.d);
    out.push_back(make("smooth 5-quadric: 13 excluded", "cannot be 13", ds == std::vector<std::int64_t>{12, 14}, join(ds)));
  }
  {
    auto s = solve_classification_equation("cone");
    std::vector<std::int64_t> b0, bh;
    for (const auto& x : s) (x.b == 0 ? b0 : bh).push_back(x.d);
    out.push_back(make("cone: b=0 -> {12,14}, b=1/2 -> {13}", "(a-6)(a-d+7)=0",
                       b0 == std::vector<std::int64_t>{12, 14} && bh == std::vector<std::int64_t>{13},
                       "b=0 " + join(b0) + ", b=1/2 " + join(bh)));
  }
  {
    auto s = solve_classification_equation("fiber");
    std::vector<std::int64_t> k3, ab;
    for (const auto& x : s) (x.label == "K3" ? k3 : ab).push_back(x.d);
    out.push_back(make("fiber degrees: K3 {4,6}, abelian {10}", "10d_{X_y}-24 ... 10d_{X_y}",
                       k3 == std::vector<std::int64_t>{4, 6} && ab == std::vector<std::int64_t>{10},
                       "K3 " + join(k3) + ", abelian " + join(ab)));
  }

  // Intersection-theoretic cross-checks.
  {
    const QPolynomial d = params::d(), a = params::a();
    auto two = [](const QPolynomial& p) { return p.scale(mpq_class(2)); };
    auto k = [](long v) { return params::constant(v); };
    auto ring = builtin_ring("Q4smooth");
    const QPolynomial q4 = double_point_discrepancy(
        ChowClass::generator(ring, "theta1").scale(a) + ChowClass::generator(ring, "theta2").scale(d - a),
        ChowClass::generator(ring, "H"));
    const QPolynomial expect = two(a * a) - two(a * d) + d * d - d.scale(mpq_class(13)) + k(84);
    out.push_back(make("Q4 double point identity 84-d = 12d-2a^2-d^2+2ad", "c_2(S)=12d-2a^2-d^2+2ad", q4 == expect,
                       q4.to_string(params::names())));

    const QPolynomial cone = cone_discrepancy();
    const QPolynomial cone_expect = two((a - k(6)) * (a - d + k(7))).scale(mpq_class(-1));
    out.push_back(make("cone double point identity", "a^2+a(1-d)+6d-42=(a-6)(a-d+7)=0", cone == cone_expect,
                       cone.to_string(params::names())));

    const auto cT = tangent_chern(ring);
    const ChowClass H = ChowClass::generator(ring, "H");
    out.push_back(make("c(T_Q4) = 1 + 4H + 7H^2 + ...", "c_2(N_{S|Q^0_4})=12h^2-c_2(S)",
                       (cT.component(1) - H.scale(mpq_class(4))).is_zero() &&
                           (cT.component(2) - (H * H).scale(mpq_class(7))).numerically_zero(),
                       cT.component(1).to_string() + "; " + cT.component(2).to_string()));

    const auto k3 = fiber_degrees(2), ab = fiber_degrees(0);
    out.push_back(make("fiber degrees from P^4 double point formula", "10d_{X_y}-24", k3 == std::vector<std::int64_t>{4, 6} && ab == std::vector<std::int64_t>{10},
                       "K3 " + join(k3) + ", abelian " + join(ab)));

    auto classes = fibered_classes({4, 6, 10});
    std::string detail;
    bool pass = classes.size() == 3;
    for (const auto& c : classes) detail += c.description + (c.d ? " (d=" + std::to_string(*c.d) + ")" : "") + "; ";
    if (pass)
      pass = classes[0].d == 11 && classes[0].description == "4*xi^2 + 3*h*xi" && !classes[1].d &&
             classes[2].d == 17 && classes[2].description == "10*xi^2 - 3*h*xi";
    out.push_back(make("fibered classes", "[X~]=6xi^2+(d-12)h xi", pass, detail));

    const QPolynomial bad = exceptional_intersection(k(10), k(-3));
    const QPolynomial x11 = exceptional_intersection(k(4), k(3));
    out.push_back(make("10xi^2-3h xi meets [Xi]xi negatively", "[Xi]xi=(xi^2-2xi h)xi=xi^3-2xi^2h",
                       params::value(bad) < 0 && params::value(x11) >= 0,
                       "10xi^2-3hxi: " + params::value(bad).get_str() + ", 4xi^2+3hxi: " + params::value(x11).get_str()));

    const auto six = pushforward_chern_for_class(6, d - k(12));
    QPolynomial closed = d * d;
    closed = closed.scale(mpq_class(1, 2)) - d.scale(mpq_class(29, 2)) + k(108);
    out.push_back(make("pushforward c_2 for 6xi^2+(d-12)h xi", "1/2 d^2 - (29/2)d + 108", six && six->c2 == closed,
                       six ? six->c2.to_string(params::names()) : "no split"));
    ok = true;
    for (long v = -100; v <= 100; ++v) ok = ok && pushforward_c2_closed_form(v) > 0;
    out.push_back(make("closed form positive on [-100,100]", "The latter is nonzero for d in Z", ok, ""));
    out.push_back(make("B_15: closed form at d=15 is 3", "c_2(pi''_*(E'))=3", pushforward_c2_closed_form(15) == 3,
                       pushforward_c2_closed_form(15).get_str()));
    const auto four = pushforward_chern_for_class(4, k(3));
    out.push_back(make("X_11: class 4xi^2+3h xi gives c_2 = 1", "leading to c_2(pi''_*(E'))=1",
                       four && params::value(four->c2) == 1,
                       four ? params::value(four->c2).get_str() + " (closed form at d=11: " +
                                  pushforward_c2_closed_form(11).get_str() + ")"
                            : "no split"));
  }
  return out;
}

}  // namespace pfcy
