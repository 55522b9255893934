// Prints the (1,2) transfer fidelity of a block form over one period as CSV,
// e.g. for plotting the perfect-state-transfer peak of Gamma(2,6) at pi/2.

#include <iostream>
#include <numbers>

#include "twalk/spectral_system.hpp"

int main(int argc, char** argv) {
    const std::string blocks = argc > 1 ? argv[1] : "2,6";
    const twalk::BlockForm form = twalk::BlockForm::parse(blocks);
    const int j0 = form.odd_origin() ? 2 : 1;

    std::cout << "t,fidelity_12\n";
    const int samples = 800;
    for (int k = 0; k <= samples; ++k) {
        const double t = 2 * std::numbers::pi * k / samples;
        const double p = std::norm(twalk::offdiag_entry(form, j0, t));
        std::cout << t << ',' << p << '\n';
    }
    return 0;
}
