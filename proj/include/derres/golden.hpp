// Reference matrices in the canonical text layout, used by the acceptance
// suite and mirrored under tests/golden/.

#pragma once

#include <string_view>

namespace derres::golden {

// Transposed Jacobian of the three 2x2 minors in the 2x3 case.
inline constexpr std::string_view jacobian_n2 =
    "rows: F[1] F[2] F[3]\n"
    "cols: x[1,1] x[1,2] x[1,3] x[2,1] x[2,2] x[2,3]\n"
    "F[1] | 0 | x[2,3] | -x[2,2] | 0 | -x[1,3] | x[1,2]\n"
    "F[2] | x[2,3] | 0 | -x[2,1] | -x[1,3] | 0 | x[1,1]\n"
    "F[3] | x[2,2] | -x[2,1] | 0 | -x[1,2] | x[1,1] | 0\n";

// Second differential of the cokernel resolution in the 3x4 case.
inline constexpr std::string_view partial2_n3 =
    "rows: b[1,1] b[1,2] b[1,3] b[1,4] b[2,1] b[2,2] b[2,3] b[2,4] b[3,1] b[3,2] b[3,3] b[3,4]\n"
    "cols: c[2,1] c[3,1] c[1,2] c[3,2] c[1,3] c[2,3] c[2,2] c[3,3]\n"
    "b[1,1] | x[2,1] | x[3,1] | 0 | 0 | 0 | 0 | -x[1,1] | -x[1,1]\n"
    "b[1,2] | x[2,2] | x[3,2] | 0 | 0 | 0 | 0 | -x[1,2] | -x[1,2]\n"
    "b[1,3] | x[2,3] | x[3,3] | 0 | 0 | 0 | 0 | -x[1,3] | -x[1,3]\n"
    "b[1,4] | x[2,4] | x[3,4] | 0 | 0 | 0 | 0 | -x[1,4] | -x[1,4]\n"
    "b[2,1] | 0 | 0 | x[1,1] | x[3,1] | 0 | 0 | x[2,1] | 0\n"
    "b[2,2] | 0 | 0 | x[1,2] | x[3,2] | 0 | 0 | x[2,2] | 0\n"
    "b[2,3] | 0 | 0 | x[1,3] | x[3,3] | 0 | 0 | x[2,3] | 0\n"
    "b[2,4] | 0 | 0 | x[1,4] | x[3,4] | 0 | 0 | x[2,4] | 0\n"
    "b[3,1] | 0 | 0 | 0 | 0 | x[1,1] | x[2,1] | 0 | x[3,1]\n"
    "b[3,2] | 0 | 0 | 0 | 0 | x[1,2] | x[2,2] | 0 | x[3,2]\n"
    "b[3,3] | 0 | 0 | 0 | 0 | x[1,3] | x[2,3] | 0 | x[3,3]\n"
    "b[3,4] | 0 | 0 | 0 | 0 | x[1,4] | x[2,4] | 0 | x[3,4]\n";

// Degree-2 bar differential [partial2 | M] in the 2x3 case, columns indexed
// c[2,1], c[1,2], c[2,2], L[1,1], ..., L[3,3].
inline constexpr std::string_view bar2_n2 =
    "rows: b[1,1] b[1,2] b[1,3] b[2,1] b[2,2] b[2,3]\n"
    "cols: c[2,1] c[1,2] c[2,2] L[1,1] L[1,2] L[1,3] L[2,1] L[2,2] L[2,3] L[3,1] L[3,2] L[3,3]\n"
    "b[1,1] | x[2,1] | 0 | -x[1,1] | 0 | x[1,2] | -x[1,3] | 0 | -x[1,1] | 0 | 0 | 0 | x[1,1]\n"
    "b[1,2] | x[2,2] | 0 | -x[1,2] | x[1,2] | 0 | 0 | -x[1,1] | 0 | -x[1,3] | 0 | 0 | x[1,2]\n"
    "b[1,3] | x[2,3] | 0 | -x[1,3] | x[1,3] | 0 | 0 | 0 | -x[1,3] | 0 | -x[1,1] | x[1,2] | 0\n"
    "b[2,1] | 0 | x[1,1] | x[2,1] | -x[2,1] | x[2,2] | -x[2,3] | 0 | 0 | 0 | 0 | 0 | 0\n"
    "b[2,2] | 0 | x[1,2] | x[2,2] | 0 | 0 | 0 | -x[2,1] | x[2,2] | -x[2,3] | 0 | 0 | 0\n"
    "b[2,3] | 0 | x[1,3] | x[2,3] | 0 | 0 | 0 | 0 | 0 | 0 | -x[2,1] | x[2,2] | -x[2,3]\n";

}  // namespace derres::golden
