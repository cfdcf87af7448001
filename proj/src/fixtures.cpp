#include "wittforge/fixtures.hpp"

namespace wittforge::fixtures {

const std::vector<ThetaEntry>& theta_table() {
    static const std::vector<ThetaEntry> table = {
        {1, "p[1]", 1, "m[1]", "e[1]", "h[1]", "s[1]"},
        {2, "-p[1,1] + p[2]", 2, "-m[1,1]", "-e[2]", "-h[1,1] + h[2]", "-s[1,1]"},
        {3, "-p[1,1,1] + p[3]", 3, "-2*m[1,1,1] - m[2,1]", "-e[2,1] + e[3]",
         "-h[2,1] + h[3]", "-s[2,1]"},
        {4, "-3*p[1,1,1,1] + 2*p[2,1,1] - p[2,2] + 2*p[4]", 8,
         "-9*m[1,1,1,1] - 4*m[2,1,1] - 2*m[2,2] - m[3,1]",
         "-e[2,1,1] + e[3,1] - e[4]",
         "-h[1,1,1,1] + 2*h[2,1,1] - h[2,2] - h[3,1] + h[4]",
         "-s[1,1,1,1] - s[2,1,1] - s[2,2] - s[3,1]"},
        {5, "-p[1,1,1,1,1] + p[5]", 5,
         "-24*m[1,1,1,1,1] - 12*m[2,1,1,1] - 6*m[2,2,1] - 4*m[3,1,1] - 2*m[3,2] - m[4,1]",
         "-e[2,1,1,1] + e[2,2,1] + e[3,1,1] - e[3,2] - e[4,1] + e[5]",
         "-h[2,1,1,1] + h[2,2,1] + h[3,1,1] - h[3,2] - h[4,1] + h[5]",
         "-s[2,1,1,1] - s[2,2,1] - s[3,1,1] - s[3,2] - s[4,1]"},
        {6,
         "-13*p[1,1,1,1,1,1] - 9*p[2,1,1,1,1] + 9*p[2,2,1,1] - 3*p[2,2,2] "
         "+ 8*p[3,1,1,1] - 4*p[3,3] + 12*p[6]",
         72,
         "-130*m[1,1,1,1,1,1] - 68*m[2,1,1,1,1] - 35*m[2,2,1,1] - 18*m[2,2,2] "
         "- 24*m[3,1,1,1] - 12*m[3,2,1] - 4*m[3,3] - 6*m[4,1,1] - 3*m[4,2] - m[5,1]",
         "-e[2,1,1,1,1] + e[2,2,1,1] + e[3,1,1,1] - e[3,2,1] - e[4,1,1] + e[4,2] "
         "+ e[5,1] - e[6]",
         "-h[2,2,1,1] - h[3,1,1,1] + 3*h[3,2,1] - h[3,3] + h[4,1,1] - h[4,2] "
         "- h[5,1] + h[6]",
         "-s[2,2,1,1] - s[2,2,2] - 2*s[3,1,1,1] - 3*s[3,2,1] - s[3,3] - 2*s[4,1,1] "
         "- 2*s[4,2] - s[5,1]"},
    };
    return table;
}

const std::vector<GhostPolyEntry>& effectivity_monomial() {
    static const std::vector<GhostPolyEntry> list = {
        {"[1]", 1, "a1"},
        {"[2]", 1, "a2"},
        {"[3]", 1, "a3"},
        {"[4]", 1, "a4"},
        {"[1,1]", 2, "(a1^2 - a2)/2"},
        {"[2,1]", 1, "a1a2 - a3"},
        {"[1,1,1]", 6, "(a1^3 - 3a1a2 + 2a3)/6"},
        {"[3,1]", 1, "a1a3 - a4"},
        {"[2,2]", 2, "(a2^2 - a4)/2"},
        {"[2,1,1]", 2, "(a1^2a2 - a2^2 - 2a1a3 + 2a4)/2"},
        {"[1,1,1,1]", 24, "(a1^4 - 6a1^2a2 + 3a2^2 + 8a1a3 - 6a4)/24"},
    };
    return list;
}

const std::vector<GhostPolyEntry>& effectivity_schur() {
    static const std::vector<GhostPolyEntry> list = {
        {"[1]", 1, "a1"},
        {"[2]", 2, "(a1^2 + a2)/2"},
        {"[1,1]", 2, "(a1^2 - a2)/2"},
        {"[3]", 6, "(a1^3 + 3a1a2 + 2a3)/6"},
        {"[1,1,1]", 6, "(a1^3 - 3a1a2 + 2a3)/6"},
        {"[2,1]", 3, "(a1^3 - a3)/3"},
        {"[4]", 24, "(a1^4 + 6a1^2a2 + 3a2^2 + 8a1a3 + 6a4)/24"},
        {"[1,1,1,1]", 24, "(a1^4 - 6a1^2a2 + 3a2^2 + 8a1a3 - 6a4)/24"},
        {"[3,1]", 24, "(3a1^4 + 6a1^2a2 - 3a2^2 - 6a4)/24"},
        {"[2,1,1]", 24, "(3a1^4 - 6a1^2a2 - 3a2^2 + 6a4)/24"},
        {"[2,2]", 24, "(2a1^4 + 6a2^2 - 8a1a3)/24"},
    };
    return list;
}

const std::vector<const char*>& effectivity_schur_grouped() {
    static const std::vector<const char*> list = {
        "a1",
        "(a1^2 +- a2)/2",
        "(a1^3 +- 3a1a2 + 2a3)/6",
        "(a1^3 - a3)/3",
        "(a1^4 +- 6a1^2a2 + 3a2^2 + 8a1a3 +- 6a4)/24",
        "(3a1^4 +- 6a1^2a2 - 3a2^2 -+ 6a4)/24",
        "(2a1^4 + 6a2^2 - 8a1a3)/24",
    };
    return list;
}

const KSchurData& kschur_data() {
    static const KSchurData data = {
        "p[1,1,1,1] + 3*p[2,2] - 4*p[3,1]",
        {{1, 2, 2, 1},    // psi_1^4
         {1, -2, 2, 1},   // psi_2^2
         {1, -1, -1, 1}}, // psi_1 psi_3
        {1, 3, -4},
    };
    return data;
}

}  // namespace wittforge::fixtures
