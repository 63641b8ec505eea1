// Print the graded Poisson cohomology window of a catalog structure.

#include <iomanip>
#include <iostream>
#include <string>

#include "gpois/gpois.hpp"

using namespace gpois;

int main(int argc, char** argv) {
    std::string name = argc > 1 ? argv[1] : "cubic_x3_y2z";
    CatalogEntry e = catalog_get(name);
    std::cout << e.name << ": " << e.description << "\n";

    CohomologyWindow w = cohomology_window(e.structure, 6);
    std::cout << "  d:";
    for (Int d = w.dmin; d <= w.max_degree; ++d)
        std::cout << std::setw(4) << to_string(d);
    std::cout << "\n";
    for (const auto& [q, slice] : w.ph) {
        std::cout << "PH^" << q << ":";
        for (const auto& [d, dim] : slice) std::cout << std::setw(4) << dim;
        std::cout << "\n";
    }
    std::cout << "PH_0:";
    for (Int d = w.dmin; d <= w.max_degree; ++d)
        if (d < 0)
            std::cout << "   .";
        else
            std::cout << std::setw(4) << w.ph0.at(d);
    std::cout << "\n";
    return 0;
}
