#include "symgen/lefschetz.hpp"

#include <charconv>
#include <stdexcept>

#include "symgen/errors.hpp"

namespace symgen {

ModelManifold::ModelManifold(Kind kind, int dim) : kind_(kind), dim_(dim) {
    if (dim < 0 || dim > 6) throw GuardViolation("model manifold dimension " + std::to_string(dim) + " outside 0..6");
}

ModelManifold ModelManifold::parse(std::string_view name) {
    const auto parse_dim = [&](std::string_view digits) {
        int d = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw std::invalid_argument("unknown model '" + std::string(name) + "', expected p1^d or p^d");
        }
        return d;
    };
    if (name == "point") return point();
    if (name.starts_with("p1^")) return p1_power(parse_dim(name.substr(3)));
    if (name.starts_with("p^")) return projective(parse_dim(name.substr(2)));
    throw std::invalid_argument("unknown model '" + std::string(name) + "', expected p1^d or p^d");
}

std::string ModelManifold::name() const {
    return (kind_ == Kind::p1_power ? "p1^" : "p^") + std::to_string(dim_);
}

MVShape ModelManifold::shape() const {
    if (kind_ == Kind::p1_power) return {dim_, dim_, true};
    return {1, dim_, false};
}

std::vector<LinearForm> ModelManifold::todd_roots() const {
    std::vector<LinearForm> roots;
    if (kind_ == Kind::p1_power) {
        for (int i = 0; i < dim_; ++i) {
            LinearForm f(static_cast<std::size_t>(dim_), 0);
            f[static_cast<std::size_t>(i)] = 2;
            roots.push_back(std::move(f));
        }
    } else {
        roots.assign(static_cast<std::size_t>(dim_) + 1, LinearForm{1});
    }
    return roots;
}

LinearForm ModelManifold::hyperplane(long k) const {
    return LinearForm(static_cast<std::size_t>(generator_count()), k);
}

MVSeries ModelManifold::root(const LinearForm& form, long scale) const {
    if (static_cast<int>(form.size()) != generator_count()) {
        throw std::invalid_argument("linear form does not match the generators of " + name());
    }
    std::vector<Rational> coeffs;
    for (long c : form) coeffs.emplace_back(c * scale);
    return MVSeries::linear_form(shape(), coeffs);
}

Rational ModelManifold::integrate(const MVSeries& s) const {
    if (kind_ == Kind::p1_power) return s.coefficient(MVSeries::Exponents(static_cast<std::size_t>(dim_), 1));
    return s.coefficient({dim_});
}

ModelBundle ModelBundle::line(const ModelManifold& m, long k, int degree) {
    return {{{m.hyperplane(k), degree}}};
}

ModelBundle ModelBundle::trivial(const ModelManifold& m, int rank) {
    ModelBundle b;
    for (int i = 0; i < rank; ++i) b.summands.push_back({m.hyperplane(0), 0});
    return b;
}

ModelBundle ModelBundle::exterior_product(const ModelManifold& m, const std::vector<long>& degrees) {
    if (m.kind() != ModelManifold::Kind::p1_power || static_cast<int>(degrees.size()) != m.dim()) {
        throw std::invalid_argument("exterior_product needs one degree per factor of (P^1)^d");
    }
    return {{{degrees, 0}}};
}

ModelBundle ModelBundle::exterior_algebra(const ModelManifold& m, int sign) {
    if (m.kind() != ModelManifold::Kind::p1_power) {
        throw std::invalid_argument("exterior_algebra is only modeled on (P^1)^d, whose tangent bundle splits");
    }
    const int d = m.dim();
    ModelBundle b;
    for (unsigned subset = 0; subset < (1U << static_cast<unsigned>(d)); ++subset) {
        LinearForm c1(static_cast<std::size_t>(d), 0);
        int degree = 0;
        for (int i = 0; i < d; ++i) {
            if (subset & (1U << static_cast<unsigned>(i))) {
                c1[static_cast<std::size_t>(i)] = 2L * sign;
                ++degree;
            }
        }
        b.summands.push_back({std::move(c1), degree});
    }
    return b;
}

LineSum ModelBundle::line_symbols() const {
    LineSum lines;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        lines.push_back({static_cast<int>(i) + 1, summands[i].degree});
    }
    return lines;
}

std::vector<WeightedLine> realize(const ModelBundle& bundle, const KClass& k) {
    std::vector<WeightedLine> out;
    for (const auto& [monomial, weight] : k.terms()) {
        if (bundle.summands.empty()) throw std::invalid_argument("realize: empty bundle");
        LinearForm c1(bundle.summands.front().c1.size(), 0);
        for (const auto& [id, exponent] : monomial) {
            const auto& summand = bundle.summands.at(static_cast<std::size_t>(id - 1));
            for (std::size_t i = 0; i < c1.size(); ++i) c1[i] += exponent * summand.c1[i];
        }
        out.push_back({std::move(c1), weight});
    }
    return out;
}

MVSeries todd_class(const MVShape& shape, const std::vector<MVSeries>& roots) {
    const UniSeries todd = uni::todd_series(shape.trunc);
    MVSeries out = MVSeries::constant(shape, 1);
    for (const auto& r : roots) out = out * compose(todd, r);
    return out;
}

MVSeries chern_character(const ModelManifold& m, const ModelBundle& e) {
    const UniSeries exp = uni::exp_series(m.shape().trunc);
    MVSeries ch(m.shape());
    for (const auto& s : e.summands) ch += compose(exp, m.root(s.c1));
    return ch;
}

namespace {

std::vector<MVSeries> scaled_todd_roots(const ModelManifold& m, long scale) {
    std::vector<MVSeries> roots;
    for (const auto& f : m.todd_roots()) roots.push_back(m.root(f, scale));
    return roots;
}

TSeries t_constant(const MVShape& shape, int t_order) {
    TSeries s(static_cast<std::size_t>(t_order) + 1, MVSeries(shape));
    s[0] = MVSeries::constant(shape, 1);
    return s;
}

Rational power_of(long base, int exponent) {
    Rational r(1);
    for (int i = 0; i < exponent; ++i) r *= Rational(base);
    return r;
}

}  // namespace

TSeries t_multiply(const TSeries& a, const TSeries& b) {
    const std::size_t n = std::min(a.size(), b.size());
    TSeries out(n, MVSeries(a.front().shape()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

TSeries lambda_t(const MVShape& shape, const std::vector<MVSeries>& roots, int t_order) {
    const UniSeries exp = uni::exp_series(shape.trunc);
    TSeries out = t_constant(shape, t_order);
    for (const auto& r : roots) {
        TSeries factor = t_constant(shape, t_order);
        if (t_order >= 1) factor[1] = compose(exp, r);
        out = t_multiply(out, factor);
    }
    return out;
}

TSeries s_t(const MVShape& shape, const std::vector<MVSeries>& roots, int t_order) {
    TSeries out = t_constant(shape, t_order);
    for (const auto& r : roots) {
        TSeries factor = t_constant(shape, t_order);
        for (int k = 1; k <= t_order; ++k) {
            factor[static_cast<std::size_t>(k)] = compose(uni::exp_scaled(Rational(k), shape.trunc), r);
        }
        out = t_multiply(out, factor);
    }
    return out;
}

MVSeries evaluate_t(const TSeries& s, const Rational& t) {
    MVSeries out(s.front().shape());
    Rational power(1);
    for (const auto& c : s) {
        out += c * power;
        power *= t;
    }
    return out;
}

LocalTerm cyclic_local_term(int d, int n, int trunc) {
    if (d < 0 || d > 4 || n < 1 || n > 6 || trunc < 0 || trunc > 8) {
        throw GuardViolation("cyclic_local_term: need 0 <= d <= 4, 1 <= n <= 6, 0 <= trunc <= 8");
    }
    const MVShape shape{d, trunc, false};
    std::vector<MVSeries> roots;
    std::vector<MVSeries> scaled;
    for (int j = 0; j < d; ++j) {
        roots.push_back(MVSeries::variable(shape, j));
        scaled.push_back(MVSeries::variable(shape, j) * Rational(n));
    }

    MVSeries lhs = MVSeries::constant(shape, 1);
    for (const auto& x : roots) {
        MVSeries geometric(shape);
        for (int k = 0; k < n; ++k) geometric += compose(uni::exp_scaled(Rational(-k), trunc), x);
        lhs = lhs * geometric;
    }

    MVSeries rhs = todd_class(shape, roots) * todd_class(shape, scaled).inverse();
    rhs *= power_of(n, d);
    return {std::move(lhs), std::move(rhs)};
}

Rational rr_number(const ModelManifold& m, const ModelBundle& e) {
    return m.integrate(chern_character(m, e) * todd_class(m.shape(), scaled_todd_roots(m, 1)));
}

YPolynomial cycle_integral(const ModelManifold& m, const std::vector<WeightedLine>& lines, int n) {
    if (n < 1) throw std::invalid_argument("cycle_integral: n must be >= 1");
    const MVSeries todd_n = todd_class(m.shape(), scaled_todd_roots(m, n));
    const UniSeries exp = uni::exp_series(m.shape().trunc);
    const Rational normalization = Rational(1) / power_of(n, m.dim());
    YPolynomial out;
    for (const auto& line : lines) {
        const Rational integral = m.integrate(compose(exp, m.root(line.c1)) * todd_n);
        out += line.weight * (integral * normalization);
    }
    return out;
}

YPolynomial chi_sigma_weighted(const ModelManifold& m, const std::vector<WeightedLine>& lines, int n) {
    std::vector<WeightedLine> adams_image;
    for (const auto& line : lines) {
        LinearForm c1 = line.c1;
        for (auto& c : c1) c *= n;
        adams_image.push_back({std::move(c1), line.weight});
    }
    return cycle_integral(m, adams_image, n);
}

Rational chi_sigma_n(const ModelManifold& m, const ModelBundle& e, int n) {
    std::vector<WeightedLine> lines;
    for (const auto& s : e.summands) lines.push_back({s.c1, YPolynomial(1)});
    return chi_sigma_weighted(m, lines, n).constant_term();
}

HomogeneityCheck lemma_homogeneity(int d, int r, int n) {
    if (d < 0 || d > 4 || r < 0 || r > 4 || n < 1 || n > 8) {
        throw GuardViolation("lemma_homogeneity: need d <= 4, r <= 4, 1 <= n <= 8");
    }
    const MVShape shape{d + r, d, false};
    const auto build = [&](long scale) {
        const UniSeries exp = uni::exp_series(d);
        MVSeries ch(shape);
        for (int i = 0; i < r; ++i) ch += compose(exp, MVSeries::variable(shape, d + i) * Rational(scale));
        std::vector<MVSeries> roots;
        for (int j = 0; j < d; ++j) roots.push_back(MVSeries::variable(shape, j) * Rational(scale));
        return ch * todd_class(shape, roots);
    };
    MVSeries expected = build(1).homogeneous_component(d);
    expected *= power_of(n, d);
    return {build(n).homogeneous_component(d), std::move(expected)};
}

namespace {

void check_series_guard(std::size_t max_n) {
    if (max_n > 12) throw GuardViolation("Riemann-Roch series: max_n = " + std::to_string(max_n) + " exceeds 12");
}

long integral_value(const Rational& r, std::string_view what) {
    if (!r.is_integer()) {
        throw std::domain_error(std::string(what) + " = " + r.to_string() + " is not an integer");
    }
    return r.to_long();
}

}  // namespace

SeriesCheck sym_rr_series(const ModelManifold& m, const ModelBundle& e, std::size_t max_n) {
    check_series_guard(max_n);
    QSeries f(max_n);
    for (std::size_t l = 1; l <= max_n; ++l) {
        const Rational chi_l = chi_sigma_n(m, e, static_cast<int>(l));
        f += QSeries::monomial(max_n, l, YPolynomial(chi_l / Rational(static_cast<long>(l))));
    }
    const long chi = integral_value(rr_number(m, e), "chi(X, E)");
    return {series_exp(f), binomial_power(chi, max_n)};
}

SeriesCheck orb_rr_series(const ModelManifold& m, const ModelBundle& e, std::size_t max_n) {
    check_series_guard(max_n);
    const LineSum lines = e.line_symbols();
    QSeries f(max_n);
    QSeries closed = QSeries::one(max_n);
    for (std::size_t l = 1; l <= max_n; ++l) {
        const auto phi = realize(e, phi_cycle_tensor(lines, static_cast<int>(l), false));
        for (std::size_t mm = 1; l * mm <= max_n; ++mm) {
            const YPolynomial chi = chi_sigma_weighted(m, phi, static_cast<int>(mm));
            f += QSeries::monomial(max_n, l * mm, chi / Rational(static_cast<long>(mm)));
        }
        ModelBundle adams_image;
        for (const auto& w : realize(e, adams(lines, static_cast<int>(l)))) {
            const long mult = integral_value(w.weight.constant_term(), "Adams multiplicity");
            for (long i = 0; i < mult; ++i) adams_image.summands.push_back({w.c1, 0});
        }
        const long chi_l = integral_value(rr_number(m, adams_image), "chi(X, psi^l E)");
        closed = closed * binomial_power(chi_l, max_n).substitute_q_power(l);
    }
    return {series_exp(f), closed};
}

YPolynomial chi_minus_y_bundle(const ModelManifold& m, const ModelBundle& e) {
    YPolynomial out;
    for (const auto& s : e.summands) {
        const Rational chi = rr_number(m, {{s}});
        out += YPolynomial::y_monomial(s.degree % 2 == 0 ? chi : -chi, s.degree);
    }
    return out;
}

SeriesCheck graded_sym_series(const ModelManifold& m, const ModelBundle& e, std::size_t max_n) {
    check_series_guard(max_n);
    for (const auto& s : e.summands) {
        if (s.degree < 0) throw std::invalid_argument("graded_sym_series: grading degrees must be >= 0");
    }
    const LineSum lines = e.line_symbols();
    QSeries f(max_n);
    for (std::size_t l = 1; l <= max_n; ++l) {
        const int n = static_cast<int>(l);
        const auto phi = realize(e, phi_cycle_tensor(lines, n, true, true));
        f += QSeries::monomial(max_n, l, cycle_integral(m, phi, n) / Rational(static_cast<long>(l)));
    }
    const YPolynomial genus = chi_minus_y_bundle(m, e);
    QSeries g(max_n);
    for (std::size_t l = 1; l <= max_n; ++l) {
        g += QSeries::monomial(max_n, l, genus.substitute_power(static_cast<int>(l)) / Rational(static_cast<long>(l)));
    }
    return {series_exp(f), series_exp(g)};
}

}  // namespace symgen
