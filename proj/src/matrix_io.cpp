#include "bdc/matrix.hpp"

#include <json.hpp>

namespace bdc {

MatQ parse_matrix_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("matrix json: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw InvalidInput("matrix json: expected a nonempty array of rows");
    const auto rows = j.size();
    const auto cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw InvalidInput("matrix json: empty row");
    MatQ m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InvalidInput("matrix json: ragged rows");
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& e = j[i][k];
            if (e.is_string()) m(i, k) = Rat::parse(e.get<std::string>());
            else if (e.is_number_integer()) m(i, k) = Rat(e.get<long>());
            else throw InvalidInput("matrix json: entries must be strings \"p/q\"");
        }
    }
    return m;
}

std::string matrix_to_json(const MatQ& m) {
    nlohmann::json j = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        j.push_back(row);
    }
    return j.dump();
}

}  // namespace bdc
