#pragma once

// Generator labels of the four presented algebras and matrix assignments.

#include "qtetra/exactla/matrix.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtetra {

enum class AlgebraId { BoxQ, UqSl2Equitable, LoopEquitable, Aq };

inline std::string to_string(AlgebraId id) {
    switch (id) {
        case AlgebraId::BoxQ: return "BOXQ";
        case AlgebraId::UqSl2Equitable: return "UQSL2_EQ";
        case AlgebraId::LoopEquitable: return "LOOP_EQ";
        case AlgebraId::Aq: return "AQ";
    }
    throw std::invalid_argument("unknown algebra id");
}

inline AlgebraId parse_algebra_id(std::string_view s) {
    if (s == "BOXQ") return AlgebraId::BoxQ;
    if (s == "UQSL2_EQ") return AlgebraId::UqSl2Equitable;
    if (s == "LOOP_EQ") return AlgebraId::LoopEquitable;
    if (s == "AQ") return AlgebraId::Aq;
    throw std::invalid_argument("unknown algebra id: " + std::string(s));
}

/// Indices mod 4.
constexpr int z4(int i) { return ((i % 4) + 4) % 4; }

/// Label of the generator x_{ij}; j - i must be 1 or 2 mod 4.
inline std::string box_label(int i, int j) {
    const int a = z4(i), b = z4(j);
    const int diff = z4(b - a);
    if (diff != 1 && diff != 2) throw std::invalid_argument("x_ij requires j - i in {1, 2} mod 4");
    return std::string("x") + char('0' + a) + char('0' + b);
}

/// The eight generators in the order x01, x12, x23, x30, x02, x13, x20, x31.
inline const std::vector<std::string>& box_labels() {
    static const std::vector<std::string> labels = {"x01", "x12", "x23", "x30", "x02", "x13", "x20", "x31"};
    return labels;
}

/// (i, j) for a BOXQ label.
inline std::pair<int, int> box_indices(std::string_view label) {
    if (label.size() != 3 || label[0] != 'x') throw std::invalid_argument("not a BOXQ label: " + std::string(label));
    const int i = label[1] - '0', j = label[2] - '0';
    box_label(i, j);
    return {i, j};
}

inline const std::vector<std::string>& generator_labels(AlgebraId id) {
    static const std::vector<std::string> uq = {"x", "x_inv", "y", "z"};
    static const std::vector<std::string> loop = {"x0", "x1", "y0", "y1", "z0", "z1"};
    static const std::vector<std::string> aq = {"x", "y"};
    switch (id) {
        case AlgebraId::BoxQ: return box_labels();
        case AlgebraId::UqSl2Equitable: return uq;
        case AlgebraId::LoopEquitable: return loop;
        case AlgebraId::Aq: return aq;
    }
    throw std::invalid_argument("unknown algebra id");
}

/// Assignment of a square matrix to each generator label.
template <FieldScalar F>
struct MatrixRep {
    AlgebraId algebra = AlgebraId::BoxQ;
    std::size_t dimension = 0;
    std::map<std::string, Matrix<F>> generators;
    std::map<std::string, std::string> provenance;

    const Matrix<F>& at(const std::string& label) const {
        auto it = generators.find(label);
        if (it == generators.end()) throw std::invalid_argument("missing generator " + label);
        return it->second;
    }

    const Matrix<F>& x(int i, int j) const { return at(box_label(i, j)); }

    /// Throws unless every label of the algebra is present with a
    /// dimension x dimension matrix and no foreign labels occur.
    void validate() const {
        const auto& labels = generator_labels(algebra);
        for (const auto& l : labels) {
            const auto& m = at(l);
            if (m.rows() != dimension || m.cols() != dimension)
                throw std::invalid_argument("generator " + l + " has the wrong size");
        }
        for (const auto& [l, m] : generators) {
            bool known = false;
            for (const auto& k : labels) known = known || k == l;
            if (!known) throw std::invalid_argument("label " + l + " does not belong to " + to_string(algebra));
        }
    }

    friend bool operator==(const MatrixRep& a, const MatrixRep& b) {
        return a.algebra == b.algebra && a.dimension == b.dimension && a.generators == b.generators;
    }
};

}  // namespace qtetra
