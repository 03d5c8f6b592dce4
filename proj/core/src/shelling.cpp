#include "ncp/shelling.hpp"
