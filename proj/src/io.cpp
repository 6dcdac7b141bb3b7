#include "bnharm/io.hpp"

#include <stdexcept>

namespace bnharm {

nlohmann::json matrix_to_json(const RatMatrix& m) {
    if (m.row_labels() != m.col_labels())
        throw std::invalid_argument("matrix_to_json: labels must match");
    nlohmann::json j;
    j["labels"] = nlohmann::json::array();
    for (const auto& label : m.row_labels()) j["labels"].push_back(label.str());
    j["rows"] = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(to_string(m.at(i, k)));
        j["rows"].push_back(std::move(row));
    }
    return j;
}

RatMatrix matrix_from_json(const nlohmann::json& j) {
    std::vector<Partition> labels;
    for (const auto& s : j.at("labels"))
        labels.push_back(Partition::parse(s.get<std::string>()));
    RatMatrix m(labels, labels);
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != m.rows())
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    for (int i = 0; i < m.rows(); ++i) {
        const auto& row = rows[static_cast<size_t>(i)];
        if (static_cast<int>(row.size()) != m.cols())
            throw std::invalid_argument(
                "matrix_from_json: column count mismatch");
        for (int k = 0; k < m.cols(); ++k)
            m.at(i, k) =
                parse_rational(row[static_cast<size_t>(k)].get<std::string>());
    }
    return m;
}

std::string matrix_to_csv(const RatMatrix& m) {
    std::string out;
    for (int k = 0; k < m.cols(); ++k) {
        if (k) out += ',';
        out += '"' + m.col_labels()[static_cast<size_t>(k)].str() + '"';
    }
    out += '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int k = 0; k < m.cols(); ++k) {
            if (k) out += ',';
            out += to_string(m.at(i, k));
        }
        out += '\n';
    }
    return out;
}

}  // namespace bnharm
