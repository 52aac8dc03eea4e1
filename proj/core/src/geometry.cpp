#include "germsum/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "germsum/decompose.hpp"

namespace germsum {

Couple::Couple(Exponent a, Rational kk) : alpha(std::move(a)), k(std::move(kk)) {
    if (alpha.is_zero()) throw domain_error("couple exponent must be nonzero");
    for (int v : alpha.e)
        if (v < 0) throw domain_error("couple exponent must be nonnegative");
    if (k <= 0) throw domain_error("couple level k must be positive");
}

std::vector<Rational> Couple::normal_form() const {
    std::vector<Rational> v;
    v.reserve(alpha.e.size());
    for (int a : alpha.e) v.push_back(k * a);
    return v;
}

std::string Couple::to_string() const {
    std::string s = "alpha=[";
    for (size_t j = 0; j < alpha.e.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(alpha.e[j]);
    }
    s += "] k=";
    s += k.get_den() == 1 ? k.get_num().get_str() : k.get_str();
    return s;
}

Couple parse_couple(const std::string& text) {
    // "alpha=[1,3] k=2/3"
    const auto apos = text.find("alpha=[");
    const auto kpos = text.find("k=");
    if (apos == std::string::npos || kpos == std::string::npos)
        throw error("malformed couple '" + text + "', expected \"alpha=[..] k=p/q\"");
    const auto close = text.find(']', apos);
    if (close == std::string::npos) throw error("malformed couple '" + text + "'");
    std::string list = text.substr(apos + 7, close - apos - 7);
    std::vector<int> entries;
    std::istringstream is(list);
    std::string item;
    while (std::getline(is, item, ','))
        entries.push_back(static_cast<int>(std::stol(item)));
    if (entries.empty()) throw error("couple has empty exponent list: '" + text + "'");
    Rational k = parse_rational(text.substr(kpos + 2));
    return Couple(Exponent(entries), k);
}

bool couple_equiv(const Couple& a, const Couple& b) {
    if (a.dim() != b.dim()) throw dimension_error("couple dimension mismatch");
    return a.normal_form() == b.normal_form();
}

CoupleOrder couple_compare(const Couple& a, const Couple& b) {
    if (a.dim() != b.dim()) throw dimension_error("couple dimension mismatch");
    const auto va = a.normal_form(), vb = b.normal_form();
    bool le = true, ge = true, lt = true, gt = true;
    for (size_t j = 0; j < va.size(); ++j) {
        if (va[j] > vb[j]) le = false;
        if (va[j] < vb[j]) ge = false;
        if (va[j] >= vb[j]) lt = false;
        if (va[j] <= vb[j]) gt = false;
    }
    if (le && ge) return CoupleOrder::Equal;
    if (lt) return CoupleOrder::StrictLess;
    if (gt) return CoupleOrder::StrictGreater;
    if (le) return CoupleOrder::Less;
    if (ge) return CoupleOrder::Greater;
    return CoupleOrder::Incomparable;
}

bool strict_less_max_ratio(const Couple& a, const Couple& b) {
    Rational best(-1);
    bool have = false;
    for (size_t j = 0; j < a.alpha.e.size(); ++j) {
        if (b.alpha.e[j] == 0) throw domain_error("max-ratio criterion needs nonzero entries");
        Rational ratio = Rational(a.alpha.e[j]) / Rational(b.alpha.e[j]);
        if (!have || ratio > best) {
            best = ratio;
            have = true;
        }
    }
    return best < b.k / a.k;
}

MapStep MonomialMap::pi(int i, int j, int count) {
    if (i == j) throw domain_error("pi step needs distinct axes");
    if (count < 1) throw domain_error("pi repetition must be >= 1");
    return {MapStep::Kind::Pi, i, j, count, 2};
}

MapStep MonomialMap::ram(int j, int order) {
    if (order < 2) throw domain_error("ramification order must be >= 2");
    return {MapStep::Kind::Ram, j, 0, 1, order};
}

std::string MonomialMap::to_string() const {
    std::string s;
    for (const MapStep& st : word) {
        if (!s.empty()) s += " ; ";
        if (st.kind == MapStep::Kind::Pi) {
            s += "pi(" + std::to_string(st.i + 1) + "," + std::to_string(st.j + 1) + ")";
            if (st.count != 1) s += "^" + std::to_string(st.count);
        } else {
            s += "ram(" + std::to_string(st.i + 1) + "," + std::to_string(st.order) + ")";
        }
    }
    return s;
}

MonomialMap parse_monomial_map(const std::string& text) {
    MonomialMap m;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ';'))
            ++pos;
    };
    auto expect = [&](char c) {
        if (pos >= text.size() || text[pos] != c)
            throw error("malformed monomial map word at offset " + std::to_string(pos) +
                        " in '" + text + "'");
        ++pos;
    };
    auto number = [&]() -> int {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos)
            throw error("expected a number at offset " + std::to_string(pos) + " in '" + text + "'");
        return static_cast<int>(std::stol(text.substr(start, pos - start)));
    };
    skip();
    while (pos < text.size()) {
        if (text.compare(pos, 3, "pi(") == 0) {
            pos += 3;
            int i = number();
            expect(',');
            int j = number();
            expect(')');
            int count = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                count = number();
            }
            m.word.push_back(MonomialMap::pi(i - 1, j - 1, count));
        } else if (text.compare(pos, 4, "ram(") == 0) {
            pos += 4;
            int j = number();
            expect(',');
            int order = number();
            expect(')');
            m.word.push_back(MonomialMap::ram(j - 1, order));
        } else {
            throw error("unknown map step at offset " + std::to_string(pos) + " in '" + text + "'");
        }
        skip();
    }
    return m;
}

namespace {

void apply_step_exponent(const MapStep& st, Exponent& e) {
    if (st.kind == MapStep::Kind::Pi) {
        e[st.i] += st.count * e[st.j];
    } else {
        e[st.i] *= st.order;
    }
}

}  // namespace

Exponent pullback_exponent(const MonomialMap& m, const Exponent& e) {
    Exponent r = e;
    for (const MapStep& st : m.word) {
        if (st.i >= r.dim() || (st.kind == MapStep::Kind::Pi && st.j >= r.dim()))
            throw dimension_error("map step axis outside dimension");
        apply_step_exponent(st, r);
    }
    return r;
}

Couple pullback_couple(const MonomialMap& m, const Couple& c) {
    return Couple(pullback_exponent(m, c.alpha), c.k);
}

MultiSeries pullback_series(const MonomialMap& m, const MultiSeries& f) {
    // Monomial steps act linearly on exponents, so the pullback is a plain
    // exponent rewrite; total degrees never decrease, which keeps the cap.
    MultiSeries r(f.dim(), f.cap());
    for (const auto& [exp, c] : f.terms()) {
        const Exponent target = pullback_exponent(m, exp);
        if (target.total_degree() <= f.cap()) r.add_term(target, c);
    }
    return r;
}

namespace {

std::vector<std::vector<Rational>> normal_forms(const std::vector<Couple>& cs) {
    std::vector<std::vector<Rational>> v;
    v.reserve(cs.size());
    for (const auto& c : cs) v.push_back(c.normal_form());
    return v;
}

void apply_step_all(const MapStep& st, std::vector<Couple>& cs) {
    for (auto& c : cs) c = Couple(pullback_exponent(MonomialMap{{st}}, c.alpha), c.k);
}

}  // namespace

OrderingResult order_couples(const std::vector<Couple>& couples) {
    if (couples.empty()) throw domain_error("order_couples needs a nonempty family");
    const int d = couples.front().dim();
    for (const auto& c : couples)
        if (c.dim() != d) throw dimension_error("couples disagree on dimension");
    for (size_t i = 0; i < couples.size(); ++i)
        for (size_t j = i + 1; j < couples.size(); ++j)
            if (couple_equiv(couples[i], couples[j]))
                throw domain_error("couples " + std::to_string(i) + " and " + std::to_string(j) +
                                   " are equivalent; no strict order exists");

    OrderingResult res;
    res.images = couples;

    auto emit = [&](const OrderingStep& os) {
        res.trace.push_back(os);
        res.map.word.push_back(os.step);
        apply_step_all(os.step, res.images);
    };

    // Phase 1: every couple gets all-positive entries. Fixing one zero
    // entry never creates another, so this terminates.
    for (;;) {
        bool fixed_any = false;
        for (size_t c = 0; c < res.images.size() && !fixed_any; ++c) {
            const Exponent& a = res.images[c].alpha;
            for (int i = 0; i < d && !fixed_any; ++i) {
                if (a[i] != 0) continue;
                int src = -1;
                for (int j = 0; j < d; ++j)
                    if (a[j] > 0) {
                        src = j;
                        break;
                    }
                OrderingStep os{OrderingStep::Reason::ZeroFix, MonomialMap::pi(i, src, 1),
                                static_cast<int>(c), -1, std::nullopt};
                emit(os);
                fixed_any = true;
            }
        }
        if (!fixed_any) break;
    }

    // Phase 2: fix the first pair that is not strictly comparable. For an
    // incomparable pair pick axes l, m with beta_a[l] < beta_b[l] and
    // beta_a[m] > beta_b[m]; pi(m,l)^N with minimal
    // N > (beta_a[m]-beta_b[m]) / (beta_b[l]-beta_a[l]) orders those axes.
    // A tie on axis m is the bound-0 case of the same rule and takes N = 1.
    for (;;) {
        auto nf = normal_forms(res.images);
        int pa = -1, pb = -1;
        for (size_t i = 0; i < res.images.size() && pa < 0; ++i)
            for (size_t j = i + 1; j < res.images.size() && pa < 0; ++j) {
                const auto ord = couple_compare(res.images[i], res.images[j]);
                if (ord != CoupleOrder::StrictLess && ord != CoupleOrder::StrictGreater) {
                    pa = static_cast<int>(i);
                    pb = static_cast<int>(j);
                }
            }
        if (pa < 0) break;

        const auto &va = nf[static_cast<size_t>(pa)], &vb = nf[static_cast<size_t>(pb)];
        // Let "low" be the couple smaller on some axis l.
        int low = pa, high = pb;
        int l = -1;
        for (int j = 0; j < d; ++j)
            if (va[static_cast<size_t>(j)] < vb[static_cast<size_t>(j)]) {
                l = j;
                break;
            }
        if (l < 0) {
            std::swap(low, high);
            for (int j = 0; j < d; ++j)
                if (vb[static_cast<size_t>(j)] < va[static_cast<size_t>(j)]) {
                    l = j;
                    break;
                }
        }
        const auto &vl = nf[static_cast<size_t>(low)], &vh = nf[static_cast<size_t>(high)];
        int m = -1;
        for (int j = 0; j < d; ++j)
            if (vl[static_cast<size_t>(j)] >= vh[static_cast<size_t>(j)]) {
                m = j;
                break;
            }

        const Rational bound =
            (vl[static_cast<size_t>(m)] - vh[static_cast<size_t>(m)]) /
            (vh[static_cast<size_t>(l)] - vl[static_cast<size_t>(l)]);
        // Minimal integer strictly above the bound.
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), bound.get_num().get_mpz_t(), bound.get_den().get_mpz_t());
        int n = static_cast<int>(fl.get_si()) + 1;

        OrderingStep os{OrderingStep::Reason::OrderFix, MonomialMap::pi(m, l, n), low, high, bound};
        emit(os);
    }

    res.order.resize(res.images.size());
    std::iota(res.order.begin(), res.order.end(), 0);
    std::sort(res.order.begin(), res.order.end(), [&](int i, int j) {
        return couple_compare(res.images[static_cast<size_t>(i)],
                              res.images[static_cast<size_t>(j)]) == CoupleOrder::StrictLess;
    });
    return res;
}

GermCouple::GermCouple(Germ g, Rational kk) : p(std::move(g)), k(std::move(kk)) {
    if (k <= 0) throw domain_error("germ couple level k must be positive");
}

GermEquivResult germ_couple_equiv(const GermCouple& a, const GermCouple& b) {
    if (a.p.dim() != b.p.dim()) throw dimension_error("germ couple dimension mismatch");

    // Minimal positive integers with p_a / k_a = p_b / k_b.
    Rational ratio = a.k / b.k;  // = p_a / p_b
    const mpz_class pa_z = ratio.get_num(), pb_z = ratio.get_den();
    if (!pa_z.fits_sint_p() || !pb_z.fits_sint_p())
        throw domain_error("level ratio too large to decide");
    const int pa = static_cast<int>(pa_z.get_si());
    const int pb = static_cast<int>(pb_z.get_si());

    const int cap = std::min(a.p.cap(), b.p.cap());
    MultiSeries big_a = a.p.series.truncated(cap).pow(pa);
    MultiSeries big_b = b.p.series.truncated(cap).pow(pb);
    GermEquivResult res;
    res.power_a = pa;
    res.power_b = pb;
    res.certified_cap = cap;
    res.exact = a.p.exact_polynomial && b.p.exact_polynomial &&
                pa * a.p.series.max_total_degree() <= cap &&
                pb * b.p.series.max_total_degree() <= cap;
    if (big_a.is_zero() || big_b.is_zero())
        throw domain_error("certified order too low to decide germ equivalence: a germ power "
                           "vanishes modulo degree > " + std::to_string(cap));

    // Decide P_b^{p_b} = U * P_a^{p_a} by Weierstrass division: the unit
    // exists iff the remainder vanishes and the quotient is a unit.
    const LinearForm ell = LinearForm::positional(a.p.dim(), cap);
    DivisionResult div = weierstrass_divide(big_b, Germ(big_a, res.exact), ell);
    res.equivalent = div.remainder.is_zero() && !div.quotient.constant_term().is_zero();
    return res;
}

MultiSeries blowup_chart(const MultiSeries& f, const GaussRational& xi) {
    if (f.dim() < 2) throw dimension_error("blow-up chart needs dimension >= 2");
    const int d = f.dim();
    std::vector<MultiSeries> rules;
    rules.reserve(static_cast<size_t>(d));
    Exponent e1(d), e2(d), e12(d);
    e1[0] = 1;
    e2[1] = 1;
    e12[0] = 1;
    e12[1] = 1;
    // x1 -> v2, x2 -> (xi + v1) v2.
    rules.push_back(MultiSeries::monomial(d, f.cap(), e2));
    MultiSeries second = MultiSeries::monomial(d, f.cap(), e12);
    if (!xi.is_zero()) second = second + MultiSeries::monomial(d, f.cap(), e2, xi);
    rules.push_back(std::move(second));
    for (int j = 2; j < d; ++j) {
        Exponent ej(d);
        ej[j] = 1;
        rules.push_back(MultiSeries::monomial(d, f.cap(), ej));
    }
    return f.substitute(rules);
}

MultiSeries blowup_chart(const MultiSeries& f, ChartAtInfinity) {
    if (f.dim() < 2) throw dimension_error("blow-up chart needs dimension >= 2");
    const int d = f.dim();
    std::vector<MultiSeries> rules;
    rules.reserve(static_cast<size_t>(d));
    Exponent e2(d), e12(d);
    e2[1] = 1;
    e12[0] = 1;
    e12[1] = 1;
    // x1 -> v1 v2, x2 -> v2.
    rules.push_back(MultiSeries::monomial(d, f.cap(), e12));
    rules.push_back(MultiSeries::monomial(d, f.cap(), e2));
    for (int j = 2; j < d; ++j) {
        Exponent ej(d);
        ej[j] = 1;
        rules.push_back(MultiSeries::monomial(d, f.cap(), ej));
    }
    return f.substitute(rules);
}

TransportReport convergence_transport_check(const MultiSeries& f, int ram_order,
                                            const GaussRational& xi) {
    TransportReport rep;
    rep.base = radius_estimate(f);
    MonomialMap ram;
    ram.then(MonomialMap::ram(0, ram_order));
    rep.ramified = radius_estimate(pullback_series(ram, f));
    rep.blown_up = radius_estimate(blowup_chart(f, xi));
    rep.agree = rep.base.kind == rep.ramified.kind && rep.base.kind == rep.blown_up.kind;
    return rep;
}

}  // namespace germsum
