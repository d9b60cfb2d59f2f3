#pragma once

// Structure of a finite-dimensional q-tetrahedron module: type and diameter,
// the eigenspace decompositions [i,j], the shape, the four flags [h], and
// exact checks of the containments that the module's generators must satisfy.
//
// Theorem-level checks return reports rather than throwing, so a corrupted
// module produces a list of violations instead of an exception.

#include "qtetra/exactla/subspace.hpp"
#include "qtetra/presentations.hpp"
#include "qtetra/rep.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtetra {

/// Raised when a module violates a structural property an operation relies on.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModuleProfile {
    int epsilon = 1;
    std::size_t d = 0;
    std::vector<std::size_t> shape;
};

/// eps q^d, eps q^(d-2), ..., eps q^-d
template <FieldScalar F>
std::vector<F> standard_spectrum(int epsilon, std::size_t d, const FieldContext<F>& ctx) {
    std::vector<F> out;
    for (std::size_t n = 0; n <= d; ++n) {
        F v = ctx.q_power(static_cast<long>(d) - 2 * static_cast<long>(n));
        out.push_back(epsilon < 0 ? F(-v) : v);
    }
    return out;
}

template <FieldScalar F>
struct TypeDiameter {
    int epsilon = 1;
    std::size_t d = 0;
    Decomposition<F> decomposition;  // component n has eigenvalue eps q^(d-2n)
};

/// Finds eps in {1, -1} and the least d with m semisimple on spectrum
/// {eps q^(d-2n)}, every eigenspace nonzero.
template <FieldScalar F>
TypeDiameter<F> detect_type_diameter(const Matrix<F>& m, const FieldContext<F>& ctx) {
    if (!m.is_square()) throw std::invalid_argument("type detection needs a square matrix");
    const long n = static_cast<long>(m.rows());
    for (int eps : {1, -1}) {
        std::map<long, Subspace<F>> cache;
        auto eig = [&](long k) -> const Subspace<F>& {
            auto it = cache.find(k);
            if (it == cache.end()) {
                F theta = ctx.q_power(k);
                if (eps < 0) theta = -theta;
                it = cache.emplace(k, eigenspace(m, theta)).first;
            }
            return it->second;
        };
        for (long d = 0; d < n; ++d) {
            Decomposition<F> dec{m.rows(), {}};
            std::size_t total = 0;
            bool ok = true;
            for (long k = d; k >= -d && ok; k -= 2) {
                const auto& e = eig(k);
                if (e.is_zero()) ok = false;
                total += e.dim();
                dec.components.push_back(e);
            }
            if (ok && total == m.rows()) return {eps, static_cast<std::size_t>(d), std::move(dec)};
        }
    }
    throw StructuralError("not a type-epsilon semisimple spectrum: no eps in {1,-1} and d < " + std::to_string(n) +
                          " with eigenvalues {eps q^(d-2n)}");
}

/// All eight decompositions [i,j] of a type-1 module.
template <FieldScalar F>
struct BoxSpectra {
    int epsilon = 1;
    std::size_t d = 0;
    std::size_t dimension = 0;
    std::map<std::string, Decomposition<F>> decompositions;

    const Decomposition<F>& at(int i, int j) const { return decompositions.at(box_label(i, j)); }
};

/// Decomposes every generator; every generator must share one (eps, d).
template <FieldScalar F>
BoxSpectra<F> box_spectra(const MatrixRep<F>& mod, const FieldContext<F>& ctx) {
    if (mod.algebra != AlgebraId::BoxQ) throw std::invalid_argument("expected a BOXQ module");
    mod.validate();
    BoxSpectra<F> out;
    out.dimension = mod.dimension;
    bool first = true;
    for (const auto& label : box_labels()) {
        auto td = detect_type_diameter(mod.at(label), ctx);
        if (first) {
            out.epsilon = td.epsilon;
            out.d = td.d;
            first = false;
        } else if (td.epsilon != out.epsilon || td.d != out.d) {
            throw StructuralError("generator " + label + " has type " + std::to_string(td.epsilon) + " and diameter " +
                                  std::to_string(td.d) + ", unlike x01 (" + std::to_string(out.epsilon) + ", " +
                                  std::to_string(out.d) + ")");
        }
        out.decompositions.emplace(label, std::move(td.decomposition));
    }
    return out;
}

template <FieldScalar F>
ModuleProfile profile_of(const BoxSpectra<F>& spectra) {
    return {spectra.epsilon, spectra.d, spectra.at(0, 1).shape()};
}

/// [i,j]: component n is the q^(d-2n)-eigenspace of x_ij. Requires type 1.
template <FieldScalar F>
Decomposition<F> decomposition_ij(const MatrixRep<F>& mod, int i, int j, const FieldContext<F>& ctx) {
    const auto td = detect_type_diameter(mod.x(i, j), ctx);
    if (td.epsilon != 1)
        throw StructuralError("module has type -1; apply the sign twist (negate) to obtain type 1");
    return td.decomposition;
}

struct ShapeReport {
    std::vector<std::size_t> shape;
    bool uniform = true;       // all eight generators give the same shape
    bool palindromic = true;   // rho_n = rho_(d-n)
    std::vector<std::string> violations;

    bool ok() const { return uniform && palindromic; }
};

template <FieldScalar F>
ShapeReport shape_of(const BoxSpectra<F>& spectra) {
    ShapeReport r;
    r.shape = spectra.at(0, 1).shape();
    for (const auto& [label, dec] : spectra.decompositions)
        if (dec.shape() != r.shape) {
            r.uniform = false;
            r.violations.push_back("generator " + label + " has a different shape");
        }
    for (std::size_t n = 0; n < r.shape.size(); ++n)
        if (r.shape[n] != r.shape[r.shape.size() - 1 - n]) {
            r.palindromic = false;
            r.violations.push_back("shape is not palindromic at position " + std::to_string(n));
        }
    return r;
}

template <FieldScalar F>
ShapeReport shape_of(const MatrixRep<F>& mod, const FieldContext<F>& ctx) {
    return shape_of(box_spectra(mod, ctx));
}

/// Flag [i], induced by [i,i+1]. Throws StructuralError unless the
/// inversion of [i-1,i] and the decomposition [i,i+2] induce the same flag.
template <FieldScalar F>
Flag<F> flag_of(const BoxSpectra<F>& spectra, int i) {
    auto flag = Flag<F>::induced_by(spectra.at(i, i + 1));
    if (!(Flag<F>::induced_by(spectra.at(i - 1, i).inversion()) == flag))
        throw StructuralError("flag [" + std::to_string(z4(i)) + "]: inversion of [" + std::to_string(z4(i - 1)) +
                              "," + std::to_string(z4(i)) + "] induces a different flag");
    if (!(Flag<F>::induced_by(spectra.at(i, i + 2)) == flag))
        throw StructuralError("flag [" + std::to_string(z4(i)) + "]: decomposition [" + std::to_string(z4(i)) + "," +
                              std::to_string(z4(i + 2)) + "] induces a different flag");
    return flag;
}

template <FieldScalar F>
Flag<F> flag_of(const MatrixRep<F>& mod, int i, const FieldContext<F>& ctx) {
    return flag_of(box_spectra(mod, ctx), i);
}

/// If the flags are opposite, the unique decomposition V_n = a_n ∩ b_(d-n)
/// inducing a and (inverted) b; otherwise nothing.
template <FieldScalar F>
std::optional<Decomposition<F>> check_opposite(const Flag<F>& a, const Flag<F>& b) {
    if (a.components.size() != b.components.size()) throw std::invalid_argument("flags have different diameters");
    if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("flags live in different spaces");
    const std::size_t d = a.diameter();
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; i + j < d; ++j)
            if (!subspace_intersect(a.components[i], b.components[j]).is_zero()) return std::nullopt;
    Decomposition<F> dec{a.ambient_dim, {}};
    for (std::size_t n = 0; n <= d; ++n) dec.components.push_back(subspace_intersect(a.components[n], b.components[d - n]));
    if (!subspace_sum(dec.components, a.ambient_dim).is_direct) return std::nullopt;
    if (!(Flag<F>::induced_by(dec) == a) || !(Flag<F>::induced_by(dec.inversion()) == b)) return std::nullopt;
    return dec;
}

struct FlagReport {
    std::vector<std::string> violations;
    std::size_t pairs_checked = 0;
    std::size_t decompositions_recovered = 0;

    bool ok() const { return violations.empty(); }
};

/// The four flags are mutually opposite and [i,j]_n = [i]_n ∩ [j]_(d-n) for every generator.
template <FieldScalar F>
FlagReport check_flags(const BoxSpectra<F>& spectra) {
    FlagReport r;
    std::vector<Flag<F>> flags;
    try {
        for (int h = 0; h < 4; ++h) flags.push_back(flag_of(spectra, h));
    } catch (const StructuralError& e) {
        r.violations.push_back(e.what());
        return r;
    }
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            ++r.pairs_checked;
            if (!check_opposite(flags[a], flags[b]))
                r.violations.push_back("flags [" + std::to_string(a) + "] and [" + std::to_string(b) + "] are not opposite");
        }
    for (const auto& label : box_labels()) {
        auto [i, j] = box_indices(label);
        auto rec = check_opposite(flags[i], flags[j]);
        if (rec && *rec == spectra.decompositions.at(label))
            ++r.decompositions_recovered;
        else
            r.violations.push_back("flag intersections do not reproduce [" + label.substr(1, 1) + "," +
                                   label.substr(2, 1) + "]");
    }
    return r;
}

struct TableViolation {
    int table = 1;           // 1: action of x_{i,i+1}; 2: action of x_{i,i+2}
    std::string row;         // decomposition of the row, e.g. "[i+1,i+2]"
    int i = 0;
    std::size_t n = 0;
};

struct TableReport {
    std::size_t containments_checked = 0;
    std::vector<TableViolation> violations;

    bool ok() const { return violations.empty(); }
};

namespace detail {

enum class Shift { None, Down, Up };  // subtract nothing, q^(d-2n), q^(2n-d)

enum class Target { Zero, Prev, Next, Band, Below, Above, FromPrev };

struct TableRow {
    int a, b;  // decomposition [i+a, i+b]
    const char* name;
    Shift shift;
    Target target;
};

// Action of x_{i,i+1} on the components of each decomposition.
inline constexpr TableRow table_one[] = {
    {0, 1, "[i,i+1]", Shift::Down, Target::Zero},
    {1, 2, "[i+1,i+2]", Shift::Up, Target::Prev},
    {2, 3, "[i+2,i+3]", Shift::None, Target::Band},
    {3, 0, "[i+3,i]", Shift::Up, Target::Next},
    {0, 2, "[i,i+2]", Shift::Down, Target::Prev},
    {1, 3, "[i+1,i+3]", Shift::Up, Target::Prev},
};

// Action of x_{i,i+2}.
inline constexpr TableRow table_two[] = {
    {0, 1, "[i,i+1]", Shift::Down, Target::Below},
    {1, 2, "[i+1,i+2]", Shift::Down, Target::Above},
    {2, 3, "[i+2,i+3]", Shift::Up, Target::Prev},
    {3, 0, "[i+3,i]", Shift::Up, Target::Next},
    {0, 2, "[i,i+2]", Shift::Down, Target::Zero},
    {1, 3, "[i+1,i+3]", Shift::None, Target::FromPrev},
};

template <FieldScalar F>
Subspace<F> table_target(const Decomposition<F>& dec, Target t, long n) {
    const long d = static_cast<long>(dec.diameter());
    switch (t) {
        case Target::Zero: return Subspace<F>::zero(dec.ambient_dim);
        case Target::Prev: return dec.component(n - 1);
        case Target::Next: return dec.component(n + 1);
        case Target::Band: return dec.range_sum(n - 1, n + 1);
        case Target::Below: return dec.range_sum(0, n - 1);
        case Target::Above: return dec.range_sum(n + 1, d);
        case Target::FromPrev: return dec.range_sum(n - 1, d);
    }
    throw std::logic_error("unknown table target");
}

}  // namespace detail

/// Checks every row of both action tables for every i in Z4 and every n.
template <FieldScalar F>
TableReport check_action_tables(const MatrixRep<F>& mod, const BoxSpectra<F>& spectra, const FieldContext<F>& ctx) {
    TableReport report;
    const long d = static_cast<long>(spectra.d);
    for (int table : {1, 2}) {
        const auto& rows = table == 1 ? detail::table_one : detail::table_two;
        for (int i = 0; i < 4; ++i) {
            const Matrix<F>& a = mod.x(i, i + table);
            for (const auto& row : rows) {
                const auto& dec = spectra.at(i + row.a, i + row.b);
                for (long n = 0; n <= d; ++n) {
                    F c(0);
                    if (row.shift == detail::Shift::Down) c = ctx.q_power(d - 2 * n);
                    if (row.shift == detail::Shift::Up) c = ctx.q_power(2 * n - d);
                    Matrix<F> shifted = a;
                    for (std::size_t k = 0; k < shifted.rows(); ++k) shifted(k, k) = shifted(k, k) - c;
                    const auto target = detail::table_target(dec, row.target, n);
                    ++report.containments_checked;
                    bool ok = true;
                    for (const auto& v : dec.component(n).basis())
                        if (!target.contains(shifted * v)) ok = false;
                    if (!ok) report.violations.push_back({table, row.name, i, static_cast<std::size_t>(n)});
                }
            }
        }
    }
    return report;
}

template <FieldScalar F>
TableReport check_action_tables(const MatrixRep<F>& mod, const FieldContext<F>& ctx) {
    return check_action_tables(mod, box_spectra(mod, ctx), ctx);
}

/// x02 -> x23 -> x31 -> x12 -> x20 -> x01 -> x13 -> x30, where r -> s means
/// (q r s - q^-1 s r)/(q - q^-1) = 1.
inline const std::array<std::string, 8>& q_weyl_chain() {
    static const std::array<std::string, 8> chain = {"x02", "x23", "x31", "x12", "x20", "x01", "x13", "x30"};
    return chain;
}

struct ChainReport {
    std::array<std::size_t, 8> dims{};   // dim V_g(theta) or V_g(theta^-1), alternating along the chain
    bool dims_equal = true;
    bool inverse_pair_equal = true;      // V_02(theta) = V_20(theta^-1)
    std::vector<std::string> violations;

    bool ok() const { return dims_equal && inverse_pair_equal; }
};

template <FieldScalar F>
ChainReport check_dimension_chain(const MatrixRep<F>& mod, const F& theta) {
    if (is_zero(theta)) throw std::invalid_argument("theta must be nonzero");
    ChainReport r;
    const F theta_inv = F(1) / theta;
    const auto& chain = q_weyl_chain();
    for (std::size_t k = 0; k < chain.size(); ++k) {
        r.dims[k] = eigenspace(mod.at(chain[k]), k % 2 == 0 ? theta : theta_inv).dim();
        if (r.dims[k] != r.dims[0]) {
            r.dims_equal = false;
            r.violations.push_back("dimension changes at " + chain[k]);
        }
    }
    if (!(eigenspace(mod.at("x02"), theta) == eigenspace(mod.at("x20"), theta_inv))) {
        r.inverse_pair_equal = false;
        r.violations.push_back("V_02(theta) != V_20(theta^-1)");
    }
    return r;
}

/// sum_{n=0..N} V_A(q^-2n theta) and sum_{n=0..N} V_B(q^2n theta^-1), with N
/// the matrix size (beyond which both sums are stable for a diagonalizable pair).
template <FieldScalar F>
std::pair<Subspace<F>, Subspace<F>> q_weyl_sums(const Matrix<F>& a, const Matrix<F>& b, const F& theta,
                                                const FieldContext<F>& ctx) {
    const std::size_t n = a.rows();
    std::vector<Subspace<F>> sa, sb;
    const F theta_inv = F(1) / theta;
    for (std::size_t k = 0; k <= n; ++k) {
        sa.push_back(eigenspace(a, F(ctx.q_power(-2 * static_cast<long>(k)) * theta)));
        sb.push_back(eigenspace(b, F(ctx.q_power(2 * static_cast<long>(k)) * theta_inv)));
    }
    return {subspace_sum(sa, n).sum, subspace_sum(sb, n).sum};
}

/// For an arrow a -> b: the two q-power eigenspace sums coincide.
template <FieldScalar F>
bool q_weyl_sum_identity(const Matrix<F>& a, const Matrix<F>& b, const F& theta, const FieldContext<F>& ctx) {
    auto [sa, sb] = q_weyl_sums(a, b, theta, ctx);
    return sa == sb;
}

/// For an arrow a -> b: dim V_a(theta) = dim V_b(theta^-1).
template <FieldScalar F>
bool q_weyl_dimension_identity(const Matrix<F>& a, const Matrix<F>& b, const F& theta) {
    return eigenspace(a, theta).dim() == eigenspace(b, F(F(1) / theta)).dim();
}

/// B V_A(theta) ⊆ V_A(q^2 theta) + V_A(theta) + V_A(q^-2 theta).
template <FieldScalar F>
bool three_eigenspace_containment(const Matrix<F>& a, const Matrix<F>& b, const F& theta, const FieldContext<F>& ctx) {
    const std::size_t n = a.rows();
    const auto target = subspace_sum<F>({eigenspace(a, F(ctx.q_power(2) * theta)), eigenspace(a, theta),
                                         eigenspace(a, F(ctx.q_power(-2) * theta))},
                                        n)
                            .sum;
    for (const auto& v : eigenspace(a, theta).basis())
        if (!target.contains(b * v)) return false;
    return true;
}

struct LemmaReport {
    std::size_t arrows_checked = 0;
    std::size_t eigenvalues_checked = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Eigenspace-sum and dimension identities along every arrow of the chain at
/// theta = q^d, and the three-eigenspace containment for (x01, x23) in both
/// directions at every eigenvalue.
template <FieldScalar F>
LemmaReport check_linear_algebra_lemmas(const MatrixRep<F>& mod, std::size_t d, const FieldContext<F>& ctx) {
    LemmaReport r;
    const F theta = ctx.q_power(static_cast<long>(d));
    const auto& chain = q_weyl_chain();
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const auto& a = mod.at(chain[k]);
        const auto& b = mod.at(chain[k + 1]);
        ++r.arrows_checked;
        if (!q_weyl_sum_identity(a, b, theta, ctx))
            r.violations.push_back("eigenspace sums differ on " + chain[k] + " -> " + chain[k + 1]);
        if (!q_weyl_dimension_identity(a, b, theta))
            r.violations.push_back("eigenspace dimensions differ on " + chain[k] + " -> " + chain[k + 1]);
    }
    for (const auto& theta_n : standard_spectrum(1, d, ctx)) {
        ++r.eigenvalues_checked;
        if (!three_eigenspace_containment(mod.at("x01"), mod.at("x23"), theta_n, ctx))
            r.violations.push_back("x23 V_01(theta) leaves the three neighbouring x01-eigenspaces");
        if (!three_eigenspace_containment(mod.at("x23"), mod.at("x01"), theta_n, ctx))
            r.violations.push_back("x01 V_23(theta) leaves the three neighbouring x23-eigenspaces");
    }
    return r;
}

}  // namespace qtetra
