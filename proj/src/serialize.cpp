#include "slme/serialize.hpp"

#include <cstdio>

namespace slme {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", z.real(), z.imag());
  return buf;
}

std::string trajectory_csv_header(int dim) {
  std::string h = "t";
  for (int m = 0; m < dim; ++m) {
    for (int n = m; n < dim; ++n) {
      h += ",re_rho_" + std::to_string(m) + "_" + std::to_string(n);
      h += ",im_rho_" + std::to_string(m) + "_" + std::to_string(n);
    }
  }
  return h;
}

std::string trajectory_csv_row(double t, const Matrix& rho) {
  std::string row = format_real(t);
  for (int m = 0; m < rho.rows(); ++m) {
    for (int n = m; n < rho.cols(); ++n) {
      row += "," + format_real(rho(m, n).real());
      row += "," + format_real(rho(m, n).imag());
    }
  }
  return row;
}

}  // namespace slme
