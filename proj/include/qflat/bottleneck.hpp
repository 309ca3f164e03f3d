#pragma once

#include "qflat/barcode.hpp"

namespace qflat {

// Exact bottleneck distance between barcodes. Bars match within their degree;
// infinite bars match only infinite bars (by birth level). Returns kInf when
// the infinite-bar counts per degree differ.
double bottleneck_distance(const Barcode& a, const Barcode& b);

}  // namespace qflat
