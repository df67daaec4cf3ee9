#include "qgl3/algebra/cartan.hpp"

#include <sstream>

namespace qgl3 {

std::string cartan_tag(const CartanMonomial& m) {
  std::ostringstream os;
  os << "Q(" << rat_string(m.a) << ',' << rat_string(m.b) << ','
     << rat_string(m.c) << ')';
  return os.str();
}

}  // namespace qgl3
