#pragma once

#include <utility>
#include <vector>

#include "arthur/groups.hpp"
#include "arthur/params.hpp"

namespace arthur {

// One elliptic endoscopic datum of §6.5, recorded by its group H = H1 x H2.
// plusFirst marks which factor carries the +1 eigenvalue of the order-2
// element x; both assignments occur for the orthogonal families, where x
// and -x give equivalent data, so the canonical form fixes plusFirst and
// keeps the factor pair ordered canonically instead.
struct EndoscopicDatum {
    GroupDescriptor h1;
    GroupDescriptor h2;
    bool plusFirst = true;
    // Remark 6.6: in the case Sp_2n with H = Sp_2a x SO^qd_2b, the standard
    // representation of H1 enters twisted by sgn_{W_R}.
    bool stdTwistH1 = false;

    friend bool operator==(const EndoscopicDatum&, const EndoscopicDatum&) = default;
};

// Complete duplicate-free list under the §6.5 equivalences, canonically
// ordered. G must be quasi-split, of one of the families A, B, C/D.
std::vector<EndoscopicDatum> elliptic_endoscopic_data(const GroupDescriptor& g);

// The c-Levi cases of §6.6. A1/A2 distinguish which factor of a symplectic
// group's datum contains U_c.
enum class EndoCase { A1, A2, B, CD };

struct EndoscopicLevi {
    GroupDescriptor unitary;  // U_c, quasi-split
    GroupDescriptor h1Prime;  // H'_1
    GroupDescriptor h2;       // unchanged factor
    GroupDescriptor gPrime;   // G' with L_* = U_c x G'
};

// The §6.6 table. Split types follow the alpha_c rule: the type of an even
// orthogonal factor flips when c is odd.
EndoscopicLevi c_levi_of_endoscopic(EndoCase c, const EndoscopicDatum& datum, int cLevi,
                                    const GroupDescriptor& g);

// Eq. (7.1.3): the sign S_i(x_d) relating Trans_{L_*,H}^{L_i} to the
// factorwise transfer.
int transfer_sign(int i, int c, int n, int xD);

// The parameter-twist table (8.3.8)-(8.3.15): the sgn_{W_R} twists carried
// by psi'_{H'_1} and psi'_{H_2} relative to psi_{H'_1} and psi_{H_2}.
enum class EndoShape { SpSOd, SOdSp, SpSOqd, SOqdSp };
std::pair<WChar, WChar> twist_table(Family gFamily, EndoShape shape, int cParity);
EndoShape endo_shape(const EndoscopicDatum& datum);

}  // namespace arthur
