#include "ncp/render.hpp"
