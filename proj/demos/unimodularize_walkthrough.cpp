// Build a non-unimodular structure, split off its modular part, and verify
// the decomposition pi = pi_unim + (1/l) E ^ m by hand.

#include <iostream>

#include "gpois/gpois.hpp"

using namespace gpois;

int main() {
    WeightedGrading g({1, 1});
    PoissonStructure s(g);
    s.set_bracket(1, 2, poly_parse("x^2", 2));

    std::cout << "bracket {x1,x2} = " << s.upper(1, 2).to_string() << "\n";

    Derivation m = modular(s);
    std::cout << "modular derivation m = (" << m.image(1).to_string() << ", "
              << m.image(2).to_string() << ")\n";
    std::cout << "div(m) = " << divergence(m).to_string() << "\n";

    Unimodularization u = unimodularize(s);
    std::cout << "twisting data delta = (" << u.delta.image(1).to_string() << ", "
              << u.delta.image(2).to_string() << ")\n";
    std::cout << "twisted bracket <x1,x2> = " << u.structure.upper(1, 2).to_string()
              << "\n";

    SkewKDeriv correction = wedge_with_euler(m).scaled(make_rat(Int(1), g.total()));
    Poly reassembled = u.structure.upper(1, 2) + correction.coefficient({1, 2});
    std::cout << "pi_unim + (1/l) E^m on (1,2): " << reassembled.to_string() << "\n";
    std::cout << (reassembled == s.upper(1, 2) ? "decomposition verified"
                                               : "decomposition FAILED")
              << "\n";
    return 0;
}
