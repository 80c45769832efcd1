#pragma once

#include "wblocks/algebra/multipoly.hpp"

namespace wblocks {

// Elementary and complete symmetric polynomials in x_1..x_m or y_1..y_n.
MultiPoly elementary_x(int r, int m, int n);
MultiPoly complete_y(int r, int m, int n);

// sum_{s+t=r} (-1)^t e_s(x) h_t(y)
MultiPoly e_super(int r, int m, int n);

// Symmetric in x and in y, and df/dx_i + df/dy_j = 0 modulo x_i - y_j for all i, j.
bool in_I(const MultiPoly& f, int m, int n);
// df/dx_i + df/dy_{i+s_minus} = 0 modulo x_i - y_{i+s_minus}, i = 1..m.
bool in_J(const MultiPoly& f, int m, int n, int s_minus);
bool is_symmetric(const MultiPoly& f);

// The u^{-r} coefficient of prod (1 + u^{-1} x_k) / prod (1 + u^{-1} y_k).
MultiPoly hc_series_coeff(int r, int m, int n);

} // namespace wblocks
