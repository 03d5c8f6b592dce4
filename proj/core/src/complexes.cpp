#include "ncp/complexes.hpp"
