#include "ncp/interval.hpp"
