/*
   Copyright 2026 The polylab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polylab/bigfloat.hpp"

#include <cstdlib>
#include <vector>

namespace polylab {

namespace {
thread_local Prec g_default_precision = kDefaultPrecision;
}

Prec default_precision() { return g_default_precision; }

void set_default_precision(Prec bits) {
  g_default_precision = bits < kMinPrecision ? kMinPrecision : bits;
}

std::string BigReal::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, digits <= 0 ? 0 : static_cast<size_t>(digits),
                         v_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  // strip trailing zeros of the mantissa (keep at least one digit)
  size_t last = m.find_last_not_of('0');
  if (last != std::string::npos) m.erase(last + 1);
  if (m.empty()) m = "0";
  return sign + "0." + m + "e" + std::to_string(static_cast<long>(e));
}

}  // namespace polylab
