#include "delpair/resultant.hpp"

#include <algorithm>
#include <numeric>

#include "delpair/errors.hpp"

namespace delpair {

RatFunc binary_form_resultant(const MPoly& f, int deg_f, const MPoly& g, int deg_g,
                              const std::string& hi, const std::string& lo) {
    std::vector<RatFunc> fc = f.binary_coeffs(hi, lo, deg_f);
    std::vector<RatFunc> gc = g.binary_coeffs(hi, lo, deg_g);
    std::reverse(fc.begin(), fc.end());  // descending in hi
    std::reverse(gc.begin(), gc.end());
    return sylvester_resultant(fc, gc);
}

MPoly variable_resultant(const MPoly& f, const MPoly& g, const std::string& var) {
    int df = f.degree_in(var);
    int dg = g.degree_in(var);
    if (df <= 0 || dg <= 0)
        throw std::invalid_argument("variable resultant needs positive degrees in " + var);
    auto fill = [&](const MPoly& p, int d) {
        std::vector<MPoly> c(static_cast<size_t>(d) + 1, MPoly());
        for (const auto& [power, coeff] : p.coeffs_in(var)) c[static_cast<size_t>(power)] = coeff;
        std::reverse(c.begin(), c.end());
        return c;
    };
    return sylvester_resultant(fill(f, df), fill(g, dg));
}

namespace {

std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(nvars), 0);
    // lexicographic descending in the variable order
    auto rec = [&](auto&& self, int idx, int rest) -> void {
        if (idx == nvars - 1) {
            cur[static_cast<size_t>(idx)] = rest;
            out.push_back(cur);
            return;
        }
        for (int e = rest; e >= 0; --e) {
            cur[static_cast<size_t>(idx)] = e;
            self(self, idx + 1, rest - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

RatFunc macaulay_once(const std::vector<MPoly>& forms, const std::vector<int>& degrees,
                      const std::vector<std::string>& vars, bool& minor_degenerate) {
    const int n = static_cast<int>(forms.size());
    int critical = 1;
    for (int k : degrees) critical += k - 1;

    auto monos = monomials_of_degree(n, critical);
    const int size = static_cast<int>(monos.size());
    std::map<std::vector<int>, int> col_of;
    for (int c = 0; c < size; ++c) col_of[monos[static_cast<size_t>(c)]] = c;

    // Row for monomial m: m is assigned to the smallest i with
    // x_i^(deg_i) | m (one always exists at the critical degree), and
    // carries (m / x_i^(deg_i)) * f_i.
    auto assigned = [&](const std::vector<int>& m) {
        for (int i = 0; i < n; ++i)
            if (m[static_cast<size_t>(i)] >= degrees[static_cast<size_t>(i)]) return i;
        throw std::logic_error("monomial below critical degree");
    };
    auto divisor_count = [&](const std::vector<int>& m) {
        int cnt = 0;
        for (int i = 0; i < n; ++i)
            if (m[static_cast<size_t>(i)] >= degrees[static_cast<size_t>(i)]) ++cnt;
        return cnt;
    };

    // Exponent-indexed coefficient lookup for each form, aligned to vars.
    std::vector<std::map<std::vector<int>, RatFunc>> coeffs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const MPoly& aligned = forms[static_cast<size_t>(i)];
        for (const auto& [e, c] : aligned.terms()) {
            std::vector<int> full(static_cast<size_t>(n), 0);
            for (size_t vi = 0; vi < aligned.vars().size(); ++vi) {
                auto it = std::find(vars.begin(), vars.end(), aligned.vars()[vi]);
                if (it == vars.end()) {
                    if (e[vi] != 0)
                        throw std::invalid_argument("form involves a variable outside the system");
                    continue;
                }
                full[static_cast<size_t>(it - vars.begin())] = e[vi];
            }
            coeffs[static_cast<size_t>(i)][full] = c;
        }
    }

    Matrix<RatFunc> M(size, size);
    std::vector<int> nonreduced;
    for (int r = 0; r < size; ++r) {
        const auto& m = monos[static_cast<size_t>(r)];
        int i = assigned(m);
        if (divisor_count(m) >= 2) nonreduced.push_back(r);
        for (const auto& [e, c] : coeffs[static_cast<size_t>(i)]) {
            std::vector<int> col = m;
            col[static_cast<size_t>(i)] -= degrees[static_cast<size_t>(i)];
            for (int v = 0; v < n; ++v) col[static_cast<size_t>(v)] += e[static_cast<size_t>(v)];
            M(r, col_of.at(col)) += c;
        }
    }

    RatFunc det_full = det_fraction_free(M);
    Matrix<RatFunc> minor(static_cast<int>(nonreduced.size()), static_cast<int>(nonreduced.size()));
    for (size_t a = 0; a < nonreduced.size(); ++a)
        for (size_t b = 0; b < nonreduced.size(); ++b)
            minor(static_cast<int>(a), static_cast<int>(b)) =
                M(nonreduced[a], nonreduced[b]);
    RatFunc det_minor = det_fraction_free(minor);
    if (det_minor.is_zero()) {
        minor_degenerate = true;
        return RatFunc();
    }
    minor_degenerate = false;
    return det_full / det_minor;
}

}  // namespace

MacaulayResult macaulay_resultant(const std::vector<MPoly>& forms, const std::vector<int>& degrees,
                                  const std::vector<std::string>& vars) {
    if (forms.size() != vars.size() || forms.size() != degrees.size())
        throw ArityMismatch("Macaulay resultant needs as many forms as variables");
    const int n = static_cast<int>(forms.size());

    MacaulayResult out;
    bool degenerate = false;
    out.value = macaulay_once(forms, degrees, vars, degenerate);
    if (!degenerate) return out;

    // The canonical minor vanished for this particular coefficient
    // specialization. Retry after a recorded unimodular change of
    // coordinates x_j -> x_j + c * x_l (the resultant itself moves by
    // at most a sign under these).
    for (int c : {1, -1, 2, -2, 3, -3}) {
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                if (j == l) continue;
                std::vector<MPoly> moved = forms;
                MPoly repl = MPoly::variable(vars[static_cast<size_t>(j)]) +
                             MPoly(RatFunc(Rat(c))) * MPoly::variable(vars[static_cast<size_t>(l)]);
                for (auto& fm : moved) fm = fm.substitute(vars[static_cast<size_t>(j)], repl);
                bool deg2 = false;
                RatFunc v = macaulay_once(moved, degrees, vars, deg2);
                if (!deg2) {
                    out.value = v;
                    out.coordinate_change = vars[static_cast<size_t>(j)] + " -> " +
                                            vars[static_cast<size_t>(j)] +
                                            (c >= 0 ? " + " : " - ") +
                                            std::to_string(std::abs(c)) + "*" +
                                            vars[static_cast<size_t>(l)];
                    return out;
                }
            }
    }
    throw SingularInput("Macaulay minor degenerate in every searched coordinate frame");
}

}  // namespace delpair
