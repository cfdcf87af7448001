#ifndef WITTFORGE_FIXTURES_HPP
#define WITTFORGE_FIXTURES_HPP

#include <vector>

namespace wittforge::fixtures {

// Reference expansions used by the verification suite. These are transcribed
// values, kept separate from the engine so a transcription slip is
// distinguishable from a computation bug.
inline constexpr int kVersion = 1;

struct ThetaEntry {
    int n;
    const char* psi_numerator;  // sf grammar over the p basis
    long psi_denominator;
    const char* m;
    const char* e;
    const char* h;
    const char* s;
};
const std::vector<ThetaEntry>& theta_table();

struct GhostPolyEntry {
    const char* lambda;   // partition text form
    long denominator;     // printed (not necessarily reduced) denominator
    const char* printed;  // rendered ghost polynomial, e.g. "(a1^2 - a2)/2"
};
// Effectivity conditions on ghost components up to weight 4.
const std::vector<GhostPolyEntry>& effectivity_monomial();
const std::vector<GhostPolyEntry>& effectivity_schur();
// The Schur list as printed, with +- pairs collapsed.
const std::vector<const char*>& effectivity_schur_grouped();

// Degree-4 expansions over the 3-bounded Schur-like basis, used by the
// counterexample check. Basis order: [1,1,1,1], [2,1,1], [2,2], [3,1].
struct KSchurData {
    // 12 * s3_22 in psi coordinates: psi_1^4 + 3 psi_2^2 - 4 psi_1 psi_3.
    const char* twelve_s22_psi;
    std::vector<std::vector<long>> expansions;  // rows: psi_1^4, psi_2^2, psi_1 psi_3
    std::vector<long> combination;              // 12 s22 = 1*row0 + 3*row1 - 4*row2
};
const KSchurData& kschur_data();

}  // namespace wittforge::fixtures

#endif
