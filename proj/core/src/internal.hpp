#pragma once

#include "ncp/coxeter.hpp"

namespace ncp::detail {

Ambient make_ambient(const GroupSpec& g);
RootDatum make_root_datum(const GroupSpec& g);
Isometry make_coxeter_element(const GroupSpec& g, const Ambient& amb);
bool has_explicit_coxeter_element(const GroupSpec& g);
Vec generic_point(const GroupSpec& g, const Ambient& amb);

}  // namespace ncp::detail
