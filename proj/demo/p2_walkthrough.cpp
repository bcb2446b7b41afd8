// A tour of the library on the mirror of the projective plane.

#include <iostream>

#include "mirrorkit.hpp"

int main() {
    using namespace mirrorkit;

    LaurentPolynomial f = parse("x + y + 1/(x*y)");
    std::cout << "f = " << format(f) << "\n";

    std::cout << "period:";
    for (const auto& c : classical_period(f, 12)) std::cout << ' ' << c;
    std::cout << "\n";

    LatticePolytope P = newton_polytope(f);
    std::cout << "reflexive: " << (is_reflexive(P) ? "yes" : "no")
              << ", boundary points of the dual: "
              << lattice_points(dual_polytope(P).to_lattice()).boundary.size() << "\n";

    MutationData m{{2, -1}, parse("1 + x*y^2")};
    LaurentPolynomial g = mutate(f, m);
    std::cout << "mutation along w = (2,-1), F = 1 + xy^2: " << format(g) << "\n";
    std::cout << "weights of Newt(g):";
    for (const auto& w : simplex_weights(newton_polytope(g))) std::cout << ' ' << w;
    std::cout << "\n";

    auto report = p2_correspondence_check(3, MutationBounds{12, 6});
    std::cout << "Markov correspondence to depth 3: " << (report.ok() ? "holds" : "fails") << "\n";

    auto rec = fit_recurrence(classical_period(f, 39), 4, 4);
    if (!rec) return 1;
    std::cout << "operator: " << to_string(to_differential_operator(*rec)) << "\n";
    return report.ok() ? 0 : 1;
}
