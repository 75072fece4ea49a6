#pragma once

#include <string>

#include "torusmix/field.hpp"

namespace torusmix {

/// MXB1 field file: magic "MXB1", little-endian u32 dim, u32 n, then n^dim
/// IEEE-754 float64 values in row-major order.
void write_field(const ScalarField& f, const std::string& path);
ScalarField read_field(const std::string& path);

/// CSV export, one value per line; header "i,value" (d=1) or "i,j,value" (d=2).
void write_field_csv(const ScalarField& f, const std::string& path);

}  // namespace torusmix
