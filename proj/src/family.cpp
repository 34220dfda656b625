#include "delpair/family.hpp"

#include <algorithm>
#include <numeric>

#include "delpair/errors.hpp"
#include "delpair/resultant.hpp"

namespace delpair {

namespace {

// Univariate polynomials over the fraction field, ascending powers.
using UPoly = std::vector<RatFunc>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder of a modulo a monic divisor.
UPoly umod_monic(UPoly a, const UPoly& monic) {
    utrim(a);
    const int k = static_cast<int>(monic.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= k) {
        RatFunc lead = a.back();
        int shift = static_cast<int>(a.size()) - 1 - k;
        if (!lead.is_zero())
            for (int j = 0; j <= k; ++j) a[static_cast<size_t>(shift + j)] -= lead * monic[static_cast<size_t>(j)];
        a.pop_back();
        utrim(a);
    }
    return a;
}

UPoly dehomogenize(const MPoly& form) {
    MPoly affine = form.set_var("x1", RatFunc(Rat(1)));
    UPoly out;
    for (const auto& [power, coeff] : affine.coeffs_in("x0")) {
        if (static_cast<int>(out.size()) <= power) out.resize(static_cast<size_t>(power) + 1);
        out[static_cast<size_t>(power)] = coeff.constant_value();
    }
    utrim(out);
    return out;
}

// gcd of all coefficient numerators, as a monic polynomial in the base
// variable; 1 when any coefficient has a denominator.
QPoly mpoly_content(const MPoly& p) {
    QPoly g;
    for (const auto& [e, c] : p.terms()) {
        if (!c.is_polynomial()) return QPoly(Rat(1));
        g = QPoly::gcd(g, c.num());
    }
    return g;
}

bool forms_coprime(const MPoly& f, const MPoly& g, const std::vector<std::string>& vars,
                   std::vector<Rat>* degenerate_fibers) {
    bool checked_any = false;
    for (const auto& v : vars) {
        if (f.degree_in(v) <= 0 || g.degree_in(v) <= 0) continue;
        checked_any = true;
        MPoly res = variable_resultant(f, g, v);
        if (res.is_zero()) return false;
        if (degenerate_fibers) {
            for (const Rat& r : mpoly_content(res).rational_roots())
                degenerate_fibers->push_back(r);
        }
    }
    (void)checked_any;
    return true;
}

void sort_unique(std::vector<Rat>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// a*x + b*y = g with g = gcd(a, b) >= 0
std::tuple<long, long, long> ext_gcd(long a, long b) {
    if (b == 0) return {a >= 0 ? a : -a, a >= 0 ? 1 : -1, 0};
    auto [g, x, y] = ext_gcd(b, a % b);
    return {g, y, x - (a / b) * y};
}

}  // namespace

ProjectiveFamily::ProjectiveFamily(BaseRing base_ring, int fiber_dim)
    : base(std::move(base_ring)), dim(fiber_dim) {
    if (dim < 1 || dim > 3)
        throw UnsupportedDimension("fiber dimension " + std::to_string(dim) +
                                   " is outside the supported range 1..3");
}

std::vector<std::string> ProjectiveFamily::coords() const {
    std::vector<std::string> out;
    for (int i = 0; i <= dim; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

BundleSection::BundleSection(const ProjectiveFamily& fam, int k, MPoly f)
    : family(fam), twist(k), form(std::move(f)) {
    if (twist < 1) throw InvalidSection("bundle twist must be a positive integer");
    if (form.is_zero()) throw InvalidSection("section form is identically zero");
    auto coords = family.coords();
    for (const auto& v : form.vars())
        if (form.degree_in(v) > 0 && std::find(coords.begin(), coords.end(), v) == coords.end())
            throw InvalidSection("form involves variable " + v + " outside the family coordinates");
    auto deg = form.homogeneous_degree();
    if (!deg || *deg != twist)
        throw HomogeneityError("form " + form.to_text(family.base.variable()) + " has degree " +
                               (deg ? std::to_string(*deg) : std::string("mixed")) +
                               " but the declared twist is " + std::to_string(twist));
    for (const auto& [e, c] : form.terms())
        if (!family.base.contains(c))
            throw InvalidSection("coefficient " + family.base.element_text(c) +
                                 " is not an element of " + family.base.name());
}

SectionSequence::SectionSequence(ProjectiveFamily fam, std::vector<BundleSection> secs)
    : family(std::move(fam)), sections(std::move(secs)) {
    if (sections.empty()) throw ArityMismatch("section sequence is empty");
    if (static_cast<int>(sections.size()) > family.dim + 1)
        throw ArityMismatch("sequence of length " + std::to_string(sections.size()) +
                            " exceeds d+1 = " + std::to_string(family.dim + 1));
    for (const auto& s : sections)
        if (!(s.family == family))
            throw ArityMismatch("sections live on different families");
}

SectionSequence SectionSequence::permuted(const std::vector<int>& perm) const {
    if (perm.size() != sections.size())
        throw ArityMismatch("permutation length does not match the sequence");
    std::vector<bool> seen(perm.size(), false);
    std::vector<BundleSection> out;
    for (int p : perm) {
        if (p < 1 || p > static_cast<int>(perm.size()) || seen[static_cast<size_t>(p - 1)])
            throw ArityMismatch("not a permutation of 1.." + std::to_string(perm.size()));
        seen[static_cast<size_t>(p - 1)] = true;
        out.push_back(sections[static_cast<size_t>(p - 1)]);
    }
    return SectionSequence(family, std::move(out));
}

MPoly CoordChange::apply(const MPoly& form) const {
    MPoly u = MPoly::variable("__u"), v = MPoly::variable("__v");
    MPoly nx0 = MPoly(RatFunc(Rat(a))) * u + MPoly(RatFunc(Rat(b))) * v;
    MPoly nx1 = MPoly(RatFunc(Rat(c))) * u + MPoly(RatFunc(Rat(d))) * v;
    MPoly out = form.substitute("x0", nx0).substitute("x1", nx1);
    out = out.substitute("__u", MPoly::variable("x0")).substitute("__v", MPoly::variable("x1"));
    return out;
}

std::string CoordChange::describe() const {
    auto lin = [](int p, int q) {
        std::string s;
        if (p != 0) s += (p == 1 ? "" : p == -1 ? "-" : std::to_string(p) + "*") + std::string("x0");
        if (q != 0) {
            if (!s.empty()) s += q > 0 ? " + " : " - ";
            else if (q < 0) s += "-";
            int aq = std::abs(q);
            s += (aq == 1 ? "" : std::to_string(aq) + "*") + std::string("x1");
        }
        if (s.empty()) s = "0";
        return s;
    };
    return "x0 -> " + lin(a, b) + ", x1 -> " + lin(c, d);
}

RegularityCertificate certify_regular(const SectionSequence& seq, bool demand_global) {
    const int d = seq.family.dim;
    const int len = static_cast<int>(seq.sections.size());
    const auto vars = seq.family.coords();
    const bool over_poly_ring = seq.family.base.kind() == RingKind::PolyOverQ;

    RegularityCertificate cert;
    cert.demanded_global = demand_global;

    if (d == 3 && len < 4)
        throw UnsupportedDimension(
            "prefix-only certification on P3 is not supported; supply the full sequence");

    // Positive-codimension checks on the prefix: pairwise coprimality.
    const int prefix = std::min(len, d);
    if (d >= 2) {
        for (int j = 1; j < prefix && cert.failing_index == 0; ++j)
            for (int i = 0; i < j; ++i) {
                if (!forms_coprime(seq.sections[static_cast<size_t>(i)].form,
                                   seq.sections[static_cast<size_t>(j)].form, vars,
                                   over_poly_ring ? &cert.bad_fibers : nullptr)) {
                    cert.failing_index = j + 1;
                    cert.reason = "sections " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) +
                                  " share a common factor: the zero locus does not drop dimension";
                    break;
                }
            }
    }
    cert.prefix_certified = cert.failing_index == 0;

    // Full-length sequences additionally certify that the total
    // intersection is empty on the generic fiber, via the resultant.
    if (cert.prefix_certified && len == d + 1) {
        if (d == 1) {
            cert.resultant_kind = "sylvester";
            cert.resultant =
                binary_form_resultant(seq.sections[0].form, seq.sections[0].twist,
                                      seq.sections[1].form, seq.sections[1].twist, "x0", "x1");
        } else {
            cert.resultant_kind = "macaulay";
            std::vector<MPoly> forms;
            std::vector<int> degs;
            for (const auto& s : seq.sections) {
                forms.push_back(s.form);
                degs.push_back(s.twist);
            }
            MacaulayResult mr = macaulay_resultant(forms, degs, vars);
            cert.resultant = mr.value;
            if (!mr.coordinate_change.empty())
                cert.reason = "resultant computed after coordinate change " + mr.coordinate_change;
        }
        if (cert.resultant.is_zero()) {
            cert.failing_index = d + 1;
            cert.prefix_certified = d <= 2;  // on P3 the prefix certificate rides on the resultant
            cert.reason = "the sections share a zero on the generic fiber (vanishing resultant)";
        } else if (over_poly_ring) {
            const QPoly& r = cert.resultant.num();
            std::vector<Rat> roots = r.rational_roots();
            for (const Rat& x : roots) cert.bad_fibers.push_back(x);
            QPoly residual = r;
            QPoly var = QPoly::variable();
            for (const Rat& x : roots) {
                QPoly lin = QPoly::from_coeffs({-x, Rat(1)});
                while (lin.divides(residual)) residual = QPoly::divmod(residual, lin).first;
            }
            cert.nonrational_bad_locus = residual.degree() > 0;
        }
    }

    sort_unique(cert.bad_fibers);
    bool globally_clean = cert.bad_fibers.empty() && !cert.nonrational_bad_locus;
    cert.certified = cert.failing_index == 0 && (!demand_global || globally_clean);
    if (cert.failing_index == 0 && !cert.certified) {
        cert.failing_index = d + 1;
        std::string fibers;
        for (const Rat& x : cert.bad_fibers) fibers += (fibers.empty() ? "" : ", ") + x.get_str();
        if (cert.nonrational_bad_locus)
            fibers += (fibers.empty() ? "" : ", ") + std::string("nonrational roots of the resultant");
        cert.reason = "regular only away from the fibers at " + seq.family.base.variable() + " = " +
                      fibers;
    }
    return cert;
}

OrderCheck order_permuted_is_regular(const SectionSequence& seq, const std::vector<int>& perm,
                                     bool demand_global) {
    OrderCheck out;
    out.original = certify_regular(seq, demand_global);
    out.permuted = certify_regular(seq.permuted(perm), demand_global);
    out.agree = out.original.certified == out.permuted.certified;
    return out;
}

long intersection_number(const ProjectiveFamily& family, const std::vector<int>& twists) {
    if (static_cast<int>(twists.size()) != family.dim)
        throw ArityMismatch("intersection number on P" + std::to_string(family.dim) + " takes " +
                            std::to_string(family.dim) + " twists, got " +
                            std::to_string(twists.size()));
    long delta = 1;
    for (int k : twists) {
        if (k < 1) throw ArityMismatch("twists must be positive");
        delta *= k;
    }
    return delta;
}

ZeroLocusData zero_locus_algebra(const BundleSection& s) {
    if (s.family.dim != 1)
        throw UnsupportedDimension("zero-locus algebras are built on P1 only");
    const BaseRing& ring = s.family.base;
    const int k = s.twist;

    // A chart x0 -> a*x0 + b*x1, x1 -> c*x0 + d*x1 dehomogenizes s to a
    // degree-k polynomial with unit leading coefficient exactly when
    // s(a, c) is a unit; search small coprime points deterministically.
    static const std::vector<std::pair<int, int>> points = {
        {1, 0}, {0, 1}, {1, 1},  {1, -1}, {2, 1},  {1, 2},  {2, -1}, {1, -2},
        {3, 1}, {1, 3}, {3, 2},  {2, 3},  {3, -1}, {1, -3}, {3, -2}, {2, -3}};
    for (auto [a, c] : points) {
        RatFunc lead = s.form.set_var("x0", RatFunc(Rat(a))).set_var("x1", RatFunc(Rat(c)))
                           .constant_value();
        if (!ring.is_unit(lead)) continue;
        // Complete (a, c) to a unimodular matrix: a*x + c*y = 1 gives
        // det [[a, -y], [c, x]] = a*x + y*c = 1.
        auto [g, x, y] = ext_gcd(a, c);
        if (g != 1) continue;
        CoordChange chart{a, static_cast<int>(-y), c, static_cast<int>(x)};
        MPoly moved = chart.apply(s.form);
        UPoly u = dehomogenize(moved);
        if (static_cast<int>(u.size()) - 1 != k) continue;  // degree dropped; try next chart
        RatFunc lc = u.back();
        if (!ring.is_unit(lc)) continue;
        UPoly monic(u.size());
        for (size_t i = 0; i < u.size(); ++i) monic[i] = u[i] / lc;
        ZeroLocusData out{FiniteAlgebra::companion(ring, monic), monic, chart, lc};
        return out;
    }
    throw ZeroAtInfinity("no searched coordinate change makes " +
                         s.form.to_text(ring.variable()) +
                         " monic up to a unit; leading coefficient vanishes identically");
}

std::vector<RatFunc> restrict_section(const ZeroLocusData& locus, const BundleSection& s) {
    MPoly moved = locus.chart.is_identity() ? s.form : locus.chart.apply(s.form);
    UPoly u = dehomogenize(moved);
    UPoly r = umod_monic(std::move(u), locus.minimal_poly);
    std::vector<RatFunc> coords(locus.minimal_poly.size() - 1, RatFunc());
    for (size_t i = 0; i < r.size(); ++i) coords[i] = r[i];
    return coords;
}

QPoly coefficient_content(const MPoly& form) {
    return mpoly_content(form);
}

}  // namespace delpair
