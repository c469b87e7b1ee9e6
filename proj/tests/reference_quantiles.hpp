// Generated by tests/oracles/generate_reference_values.py — do not edit.
#pragma once

namespace reference {

struct NormalQuantilePoint { double q; double value; };
struct Chi2QuantilePoint { double df; double q; double value; };

inline constexpr NormalQuantilePoint kNormalQuantileGrid[] = {
    {0.01, -2.3263478740408411},
    {0.02, -2.0537489106318230},
    {0.03, -1.8807936081512510},
    {0.04, -1.7506860712521700},
    {0.05, -1.6448536269514727},
    {0.06, -1.5547735945968536},
    {0.07, -1.4757910281791707},
    {0.08, -1.4050715603096325},
    {0.09, -1.3407550336902164},
    {0.10, -1.2815515655446004},
    {0.11, -1.2265281200366101},
    {0.12, -1.1749867920660900},
    {0.13, -1.1263911290388006},
    {0.14, -1.0803193408149561},
    {0.15, -1.0364333894937896},
    {0.16, -0.99445788320975315},
    {0.17, -0.95416525314619436},
    {0.18, -0.91536508784281408},
    {0.19, -0.87789629505122859},
    {0.20, -0.84162123357291417},
    {0.21, -0.80642124701824024},
    {0.22, -0.77219321418868469},
    {0.23, -0.73884684918521360},
    {0.24, -0.70630256284008748},
    {0.25, -0.67448975019608174},
    {0.26, -0.64334540539291694},
    {0.27, -0.61281299101662717},
    {0.28, -0.58284150727121614},
    {0.29, -0.55338471955567288},
    {0.30, -0.52440051270804082},
    {0.31, -0.49585034734745333},
    {0.32, -0.46769879911450820},
    {0.33, -0.43991316567323376},
    {0.34, -0.41246312944140473},
    {0.35, -0.38532046640756768},
    {0.36, -0.35845879325119377},
    {0.37, -0.33185334643681659},
    {0.38, -0.30548078809939733},
    {0.39, -0.27931903444745413},
    {0.40, -0.25334710313579974},
    {0.41, -0.22754497664114947},
    {0.42, -0.20189347914185089},
    {0.43, -0.17637416478086134},
    {0.44, -0.15096921549677725},
    {0.45, -0.12566134685507401},
    {0.46, -0.10043372051146974},
    {0.47, -0.075269862099829897},
    {0.48, -0.050153583464733661},
    {0.49, -0.025068908258711058},
    {0.50, 0.0},
    {0.51, 0.025068908258711058},
    {0.52, 0.050153583464733661},
    {0.53, 0.075269862099829897},
    {0.54, 0.10043372051146988},
    {0.55, 0.12566134685507415},
    {0.56, 0.15096921549677739},
    {0.57, 0.17637416478086120},
    {0.58, 0.20189347914185075},
    {0.59, 0.22754497664114933},
    {0.60, 0.25334710313579974},
    {0.61, 0.27931903444745413},
    {0.62, 0.30548078809939733},
    {0.63, 0.33185334643681659},
    {0.64, 0.35845879325119377},
    {0.65, 0.38532046640756768},
    {0.66, 0.41246312944140488},
    {0.67, 0.43991316567323392},
    {0.68, 0.46769879911450835},
    {0.69, 0.49585034734745318},
    {0.70, 0.52440051270804066},
    {0.71, 0.55338471955567272},
    {0.72, 0.58284150727121614},
    {0.73, 0.61281299101662717},
    {0.74, 0.64334540539291694},
    {0.75, 0.67448975019608174},
    {0.76, 0.70630256284008748},
    {0.77, 0.73884684918521369},
    {0.78, 0.77219321418868479},
    {0.79, 0.80642124701824033},
    {0.80, 0.84162123357291436},
    {0.81, 0.87789629505122879},
    {0.82, 0.91536508784281386},
    {0.83, 0.95416525314619425},
    {0.84, 0.99445788320975304},
    {0.85, 1.0364333894937895},
    {0.86, 1.0803193408149561},
    {0.87, 1.1263911290388006},
    {0.88, 1.1749867920660900},
    {0.89, 1.2265281200366102},
    {0.90, 1.2815515655446006},
    {0.91, 1.3407550336902166},
    {0.92, 1.4050715603096328},
    {0.93, 1.4757910281791711},
    {0.94, 1.5547735945968531},
    {0.95, 1.6448536269514723},
    {0.96, 1.7506860712521696},
    {0.97, 1.8807936081512505},
    {0.98, 2.0537489106318227},
    {0.99, 2.3263478740408408},
};

inline constexpr NormalQuantilePoint kNormalQuantileExtremes[] = {
    {1e-10, -6.3613409024040562},
    {1e-6, -4.7534243088228990},
    {0.025, -1.9599639845400542},
    {0.975, 1.9599639845400539},
    {0.999999, 4.7534243088170878},
    {0.9999999999, 6.3613408896974219},
};

inline constexpr Chi2QuantilePoint kChi2QuantileGrid[] = {
    {1, 0.95, 3.8414588206941245},
    {1, 0.001, 1.5707971492624899e-6},
    {2, 0.5, 1.3862943611198906},
    {3, 0.01, 0.11483180189911704},
    {4, 0.95, 9.4877290367811546},
    {4, 0.99, 13.276704135987622},
    {7, 0.999, 24.321886347856853},
    {9, 0.95, 16.918977604620447},
    {10, 0.5, 9.3418177655919674},
    {19, 0.95, 30.143527205646156},
    {50, 0.975, 71.420195187506410},
    {100, 0.05, 77.929465165017260},
    {2, 0.6321205588285577, 1.9999999999999999},
};

}  // namespace reference
