#include "qjones/checks.hpp"
