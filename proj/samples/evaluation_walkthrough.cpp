// Builds the evaluation module Ev(2, q), reconstructs the BOXQ module from
// its A_q pair and prints a few of the resulting facts.

#include "qtetra/qtetra.hpp"

#include <iostream>

using namespace qtetra;

int main() {
    const auto ctx = symbolic_field();
    const auto ev = evaluation_module(2, ctx.q, ctx);
    const auto box = boxq_of_loop(ev, ctx);

    const auto report = check_representation(box, ctx);
    std::cout << "relations passed: " << report.residuals.size() - report.failing.size() << "/"
              << report.residuals.size() << "\n";

    const auto spectra = box_spectra(box, ctx);
    std::cout << "epsilon = " << spectra.epsilon << ", d = " << spectra.d << ", shape =";
    for (auto r : shape_of(spectra).shape) std::cout << " " << r;
    std::cout << "\n";

    const auto cert = irreducible_pair(box.at("x01"), box.at("x23"));
    std::cout << "Burnside closure: " << cert.dim << " of " << cert.full_dim << "\n";

    std::cout << "x12 =\n";
    const auto& m = box.at("x12");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) std::cout << "  " << to_string(m(i, j));
        std::cout << "\n";
    }

    std::cout << serialize(module_to_json(twist_rho(box, 1), FieldMode::symbolic())).substr(0, 200) << "...\n";
}
