#include "steerkit/golden.hpp"

#include <cmath>

#include "steerkit/errors.hpp"

namespace steerkit {

namespace {

constexpr double kClosedFormTol = 1e-9;
constexpr double kDecimalTol = 5e-4;

std::vector<GoldenSet> build_sjwp() {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s6 = std::sqrt(6.0);
    std::vector<GoldenSet> sets;

    sets.push_back({"sjwp-n2", "Table I, N=2", 2,
                    {{1, 0, 0}, {0, 1, 0}},
                    s2 / 2.0, kClosedFormTol, true, ""});

    sets.push_back({"sjwp-n3", "Table I, N=3", 3,
                    {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                    s3 / 3.0, kClosedFormTol, true, ""});

    sets.push_back({"sjwp-n4", "Table I, N=4", 4,
                    {{s6 / 3, 0, s3 / 3}, {-s6 / 3, 0, s3 / 3}, {0, s6 / 3, s3 / 3}, {0, -s6 / 3, s3 / 3}},
                    s3 / 3.0, kClosedFormTol, true, ""});

    sets.push_back({"sjwp-n6", "Table I, N=6", 6,
                    {{0, 0, 1},
                     {2 / s5, 0, 1 / s5},
                     {(5 - s5) / 10, std::sqrt((5 + s5) / 10), 1 / s5},
                     {-(5 + s5) / 10, std::sqrt((5 - s5) / 10), 1 / s5},
                     {-(5 + s5) / 10, -std::sqrt((5 - s5) / 10), 1 / s5},
                     {(5 - s5) / 10, -std::sqrt((5 + s5) / 10), 1 / s5}},
                    (1 + s5) / 6.0, kClosedFormTol, true, ""});

    sets.push_back({"sjwp-n10", "Table I, N=10", 10,
                    {{0, 0, 1},
                     {2.0 / 3, 0, s5 / 3},
                     {s5 / 3, 1 / s3, 1.0 / 3},
                     {(3 - s5) / 6, std::sqrt((3 + s5) / 6), 1.0 / 3},
                     {-1.0 / 3, 1 / s3, s5 / 3},
                     {(-s5 - 3) / 6, std::sqrt((3 - s5) / 6), 1.0 / 3},
                     {(-s5 - 3) / 6, -std::sqrt((3 - s5) / 6), 1.0 / 3},
                     {-1.0 / 3, -1 / s3, s5 / 3},
                     {(3 - s5) / 6, -std::sqrt((3 + s5) / 6), 1.0 / 3},
                     {s5 / 3, -1 / s3, 1.0 / 3}},
                    (3 + s5) / 10.0, kClosedFormTol, true, ""});

    return sets;
}

std::vector<GoldenSet> build_optimal() {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s6 = std::sqrt(6.0);
    const double s10 = std::sqrt(10.0), s33 = std::sqrt(33.0);
    const double c5 = std::sqrt((9 + s33) / 50);
    std::vector<GoldenSet> sets;

    sets.push_back({"optimal-n2", "Table II, N=2", 2,
                    {{0, -1 / s2, 1 / s2}, {0, 1 / s2, 1 / s2}},
                    s2 / 2.0, kClosedFormTol, true, ""});

    sets.push_back({"optimal-n3", "Table II, N=3", 3,
                    {{s6 / 3, 0, s3 / 3}, {-s6 / 6, s2 / 2, s3 / 3}, {-s6 / 6, -s2 / 2, s3 / 3}},
                    s3 / 3.0, kClosedFormTol, true, ""});

    sets.push_back({"optimal-n4", "Table II, N=4", 4,
                    {{2 / s5, 0, 1 / s5},
                     {-1 / (2 * s5), s3 / 2, 1 / s5},
                     {-7 / (4 * s5), -s3 / 4, 1 / s5},
                     {1 / (4 * s5), -s3 / 4, 2 / s5}},
                    s5 / 4.0, kClosedFormTol, true, ""});

    sets.push_back({"optimal-n5", "Table II, N=5", 5,
                    {{-0.9297, 0, 0.3683},
                     {0.1459, -0.9182, 0.3683},
                     {0.6837, 0.6300, 0.3683},
                     {-0.2460, 0.6300, 0.7366},
                     {0.3461, -0.3418, 0.8737}},
                    c5, kDecimalTol, false,
                    "quoted closed form sqrt((9+sqrt(33))/50) ~ 0.5430; the main text prints "
                    "(1/20)sqrt(2(9+sqrt(33))) ~ 0.2715, a factor-2 misprint of the same value"});

    sets.push_back({"optimal-n5-exact", "SM exact set behind Table II, N=5 (pre-rotation)", 5,
                    {{0, 0, 1},
                     {1, 0, 0},
                     {(-3 + s33) / 4, std::sqrt(-13.0 / 8 + 3 * s33 / 8), 0},
                     {(3 - s33) / 8, 0.25 * std::sqrt(1.5 * (1 + s33)), -0.5},
                     {(3 - s33) / 8, 0.25 * std::sqrt(1.5 * (1 + s33)), 0.5}},
                    c5, kClosedFormTol, true, ""});

    sets.push_back({"optimal-n6", "Table II, N=6", 6,
                    {{3 / s10, 0, 1 / s10},
                     {-1 / (3 * s10), 2 * s2 / 3, 1 / s10},
                     {-std::sqrt(0.4), -1 / s2, 1 / s10},
                     {-7 / (3 * s10), 1 / (3 * s2), 2 / s10},
                     {1 / s10, -1 / s2, 2 / s10},
                     {std::sqrt(0.4) / 3, 1 / (3 * s2), 3 / s10}},
                    s10 / 6.0, kClosedFormTol, true, ""});

    sets.push_back({"optimal-n7", "Table II / SM, N=7", 7,
                    {{0.811031, 0.518332, 0.271220},
                     {-0.962517, 0, 0.271220},
                     {-0.025624, -0.942341, 0.333670},
                     {0.653592, -0.508171, 0.560874},
                     {-0.550186, 0.518331, 0.654697},
                     {0.184470, 0.733036, 0.654697},
                     {-0.110765, -0.319187, 0.941196}},
                    0.5268, kDecimalTol, false,
                    "the SM quotes C_7 ~ 0.562784, but its own formula evaluates to 0.526784 "
                    "(transposed digits); enumeration on these directions confirms 0.5268"});

    sets.push_back({"optimal-n8", "Table II / SM, N=8", 8,
                    {{0.968666, 0.065740, 0.239509},
                     {-0.747121, -0.620037, 0.239509},
                     {-0.209859, 0.942222, 0.261106},
                     {-0.650221, 0.492982, 0.578084},
                     {0.622779, -0.527067, 0.578227},
                     {-0.087923, -0.811125, 0.578227},
                     {0.431679, 0.492111, 0.755963},
                     {-0.328001, -0.034827, 0.944574}},
                    0.5219, kDecimalTol, false, "SM formula value 0.521867"});

    sets.push_back({"optimal-n9", "Table II / SM, N=9", 9,
                    {{-0.946974, -0.239896, 0.213751},
                     {0.975285, 0.055948, 0.213751},
                     {0.223587, 0.900606, 0.372717},
                     {-0.484042, 0.791698, 0.372717},
                     {0.49183, -0.750648, 0.441170},
                     {-0.243361, -0.863797, 0.441170},
                     {0.570929, 0.121485, 0.811962},
                     {-0.581037, -0.055808, 0.811961},
                     {-0.006217, 0.040411, 0.999164}},
                    0.5198, kDecimalTol, false, "SM value 0.519818"});

    sets.push_back({"optimal-n10", "Table II / SM, N=10", 10,
                    {{0.915980, 0.346916, 0.201568},
                     {-0.967957, 0.149768, 0.201568},
                     {-0.381747, -0.873784, 0.301280},
                     {0.554376, -0.775821, 0.301280},
                     {0.528849, 0.682951, 0.503881},
                     {-0.658780, 0.558670, 0.503881},
                     {-0.080984, 0.773887, 0.628125},
                     {0.065374, -0.624714, 0.778112},
                     {-0.455624, -0.167912, 0.874193},
                     {0.480513, -0.069961, 0.874193}},
                    0.5168, kDecimalTol, false, "SM formula value 0.516808"});

    return sets;
}

std::vector<GoldenSet> build_sm() {
    std::vector<GoldenSet> sets;

    sets.push_back({"optimal-n12", "SM table, N=12", 12,
                    {{-0.8002, -0.5577, 0.22050},
                     {-0.859, 0.4357, 0.2686},
                     {-0.2008, 0.9394, 0.2779},
                     {0.9529, 0.1212, 0.2779},
                     {0.7407, -0.6117, 0.2779},
                     {-0.1576, -0.9277, 0.3383},
                     {0.5093, 0.7663, 0.3917},
                     {0.2982, -0.5917, 0.7490},
                     {-0.6580, 0.0164, 0.7529},
                     {-0.1256, 0.5548, 0.8225},
                     {0.5214, 0.1453, 0.8409},
                     {-0.2212, -0.2903, 0.9310}},
                    0.5124, kDecimalTol, false, ""});

    sets.push_back({"optimal-n14", "SM table, N=14", 14,
                    {{-0.4540, -0.8654, 0.2122},
                     {0.0134, 0.3709, 0.9286},
                     {0.2711, -0.9230, 0.2732},
                     {-0.8330, -0.2467, 0.4953},
                     {0.9506, 0.2742, 0.1449},
                     {-0.9056, 0.4002, 0.1400},
                     {-0.0360, 0.9049, 0.4240},
                     {0.5655, 0.1908, 0.8024},
                     {-0.1636, -0.6802, 0.7145},
                     {0.7675, -0.4892, 0.4142},
                     {0.6443, 0.6676, 0.3729},
                     {-0.5659, 0.6873, 0.4553},
                     {-0.5152, 0.0297, 0.8566},
                     {0.2608, -0.3214, 0.9103}},
                    0.5103, kDecimalTol, false, ""});

    sets.push_back({"optimal-n16", "SM table, N=16", 16,
                    {{-0.4330, -0.8834, 0.1790},
                     {0.5947, 0.3580, 0.7198},
                     {-0.9199, 0.3544, 0.1679},
                     {0.6250, -0.6651, 0.4088},
                     {-0.8531, -0.2469, 0.4596},
                     {0.0640, 0.6012, 0.7965},
                     {0.3379, 0.8924, 0.2991},
                     {0.4152, -0.2369, 0.8784},
                     {-0.6113, 0.4624, 0.6422},
                     {-0.2007, -0.6999, 0.6854},
                     {-0.4692, 0.8396, 0.2736},
                     {-0.0471, 0.0997, 0.9939},
                     {-0.4821, -0.2496, 0.8398},
                     {0.8921, 0.4315, 0.1339},
                     {0.1751, -0.9430, 0.2830},
                     {0.9124, -0.1144, 0.3931}},
                    0.5096, kDecimalTol, false, ""});

    sets.push_back({"optimal-n18", "SM table, N=18", 18,
                    {{-0.3998, 0.5864, 0.7044},
                     {-0.1977, -0.2985, 0.9337},
                     {-0.3298, 0.2137, 0.9195},
                     {0.6925, -0.4245, 0.5833},
                     {0.4484, 0.8649, 0.2256},
                     {0.1220, 0.7780, 0.6163},
                     {0.1244, -0.6324, 0.7646},
                     {-0.6623, -0.4853, 0.5709},
                     {0.9697, -0.2072, 0.1294},
                     {-0.1528, -0.9243, 0.3498},
                     {0.4199, -0.8794, 0.2245},
                     {-0.8173, 0.4916, 0.3007},
                     {-0.7830, -0.6046, 0.1457},
                     {0.4634, 0.3948, 0.7933},
                     {0.8772, 0.2919, 0.3811},
                     {-0.3433, 0.9269, 0.1515},
                     {-0.8849, -0.0570, 0.4623},
                     {0.4534, -0.0348, 0.8907}},
                    0.5082, kDecimalTol, false, ""});

    sets.push_back({"optimal-n20", "SM table, N=20", 20,
                    {{-0.4771, -0.3132, 0.8212},
                     {-0.9316, 0.2859, 0.2241},
                     {-0.8297, -0.0335, 0.5572},
                     {0.7434, -0.0761, 0.6645},
                     {-0.0856, -0.9817, 0.1703},
                     {-0.4585, -0.7249, 0.5140},
                     {0.8713, -0.4185, 0.2562},
                     {-0.5864, 0.7777, 0.2262},
                     {0.4133, 0.3046, 0.8581},
                     {0.4841, -0.8210, 0.3025},
                     {0.3804, -0.4887, 0.7852},
                     {-0.0581, 0.0345, 0.9977},
                     {0.0123, 0.9731, 0.2302},
                     {-0.8229, -0.5475, 0.1518},
                     {0.3358, 0.6873, 0.6441},
                     {0.0713, -0.6120, 0.7876},
                     {-0.3037, 0.6792, 0.6681},
                     {0.9445, 0.2249, 0.2395},
                     {-0.3920, 0.3529, 0.8496},
                     {0.6895, 0.6968, 0.1978}},
                    0.5073, kDecimalTol, false, ""});

    return sets;
}

}  // namespace

const std::vector<GoldenSet>& sjwp_sets() {
    static const std::vector<GoldenSet> sets = build_sjwp();
    return sets;
}

const std::vector<GoldenSet>& optimal_sets() {
    static const std::vector<GoldenSet> sets = build_optimal();
    return sets;
}

const std::vector<GoldenSet>& sm_sets() {
    static const std::vector<GoldenSet> sets = build_sm();
    return sets;
}

const GoldenSet& golden_set(const std::string& id) {
    for (const auto* table : {&sjwp_sets(), &optimal_sets(), &sm_sets()}) {
        for (const GoldenSet& g : *table) {
            if (g.id == id) return g;
        }
    }
    throw ValidationError("unknown golden set id: " + id);
}

std::vector<std::string> golden_ids() {
    std::vector<std::string> ids;
    for (const auto* table : {&sjwp_sets(), &optimal_sets(), &sm_sets()}) {
        for (const GoldenSet& g : *table) ids.push_back(g.id);
    }
    return ids;
}

}  // namespace steerkit
