#pragma once

#include <json.hpp>

#include "arcalc/lambda_module.hpp"

namespace arcalc {

nlohmann::json parts_to_json(const Partition& parts);
Partition parts_from_json(const nlohmann::json& arr);

nlohmann::json matrix_to_json(const PrimeMatrix& m);

// Reads a nrows x ncols matrix from an array of row arrays.  Entries reduce
// mod p; negatives are allowed.
PrimeMatrix matrix_from_json(const nlohmann::json& rows, std::size_t nrows, std::size_t ncols,
                             const Field& field);

} // namespace arcalc
