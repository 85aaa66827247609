#include <iostream>

#include "siegel2/gradmap.hpp"
#include "siegel2/relations.hpp"
#include "siegel2/theta.hpp"

using namespace siegel2;

int main()
{
    auto tau = SiegelPoint<Quad>::parse("0.1,1.2,0.3,0.4,-0.2,1.5");
    auto snap = evaluate_snapshot(tau, EvalOptions{1e-20});
    std::cout << "radius " << snap.radius << "\n";
    for (int i = 0; i < 10; ++i)
        std::cout << "theta_" << i + 1 << " = " << snap.even(i).value.to_std() << "  +- " << snap.even(i).abs_error
                  << "\n";
    for (OddPair n : all_odd_pairs())
        std::cout << n.label() << " = " << snap.det(n).value.to_std() << "\n";

    std::cout << "{1,2,5,10} is " << to_string(classify_set(CharSet::parse("{1,2,5,10}"))) << "\n";

    Certifier<Quad> cert(7, 1e-16);
    for (const auto& e : catalog(Family::rb1, cert))
        std::cout << e.relation.to_string() << "  residual " << e.cert.max_residual << "\n";

    auto p = pgr_th2(tau, 1e-16);
    auto g = gamma_generators()[0];
    auto q = pgr_th2(act(g, tau), 1e-16);
    std::cout << "projective distance under a Gamma element: " << projective_distance(p, q) << "\n";
}
