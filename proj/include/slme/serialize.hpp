#pragma once

#include <string>

#include "slme/types.hpp"

namespace slme {

/// Fixed 17-significant-digit decimal, locale-independent.
std::string format_real(double x);

/// Complex as re+imj (Python-style), 17 significant digits each.
std::string format_complex(Complex z);

/// Upper-triangle trajectory CSV header: t,re_rho_m_n,im_rho_m_n for m <= n.
std::string trajectory_csv_header(int dim);
std::string trajectory_csv_row(double t, const Matrix& rho);

}  // namespace slme
