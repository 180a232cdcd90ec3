#include "json_common.hpp"

namespace arcalc {

using nlohmann::json;

json parts_to_json(const Partition& parts) {
    json arr = json::array();
    for (const JordanPart& p : parts)
        arr.push_back({{"len", p.len}, {"top", p.top}});
    return arr;
}

Partition parts_from_json(const json& arr) {
    Partition parts;
    for (const json& p : arr) parts.push_back({p.at("len").get<std::size_t>(), p.at("top").get<int>()});
    return parts;
}

json matrix_to_json(const PrimeMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    return rows;
}

PrimeMatrix matrix_from_json(const json& rows, std::size_t nrows, std::size_t ncols,
                             const Field& field) {
    if (!rows.is_array() || rows.size() != nrows) throw InvalidInput("matrix row count mismatch");
    PrimeMatrix m(nrows, ncols, field);
    long long p = field.modulus();
    for (std::size_t r = 0; r < nrows; ++r) {
        if (!rows[r].is_array() || rows[r].size() != ncols)
            throw InvalidInput("matrix column count mismatch");
        for (std::size_t c = 0; c < ncols; ++c) {
            long long v = rows[r][c].get<long long>() % p;
            m.set(r, c, static_cast<std::uint32_t>(v < 0 ? v + p : v));
        }
    }
    return m;
}

} // namespace arcalc
