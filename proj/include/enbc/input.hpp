#ifndef ENBC_KIT_INPUT_HPP
#define ENBC_KIT_INPUT_HPP

#include <optional>
#include <string>
#include <vector>

#include "enbc/matroid.hpp"
#include "enbc/order.hpp"
#include "enbc/scalar.hpp"

namespace enbc {

/// A parsed arrangement description: entries stay as strings until the
/// field is known, so one file format serves both Q and GF(p).
struct ArrangementInput {
    std::string name;
    ScalarField field;
    std::vector<std::vector<std::string>> rows; // row-major; column j = form x_j
    std::optional<std::vector<int>> order;      // permutation of 0..n

    int ground_size() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }

    OrderSpec order_spec() const {
        return order ? OrderSpec::from_permutation(*order) : OrderSpec::natural(ground_size());
    }
};

/// Parse and validate a JSON arrangement description.
ArrangementInput parse_input(const std::string& bytes);

ArrangementInput load_input_file(const std::string& path);

/// Build the represented matroid over the input's field.
template <class K>
Matroid<K> make_matroid(const ArrangementInput& in) {
    RepMatrix<K> m;
    m.field = in.field;
    m.rows = static_cast<int>(in.rows.size());
    int n1 = in.ground_size();
    m.columns.assign(n1, std::vector<K>(m.rows));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < n1; ++c) m.columns[c][r] = parse_scalar<K>(in.rows[r][c], in.field);
    return Matroid<K>::from_matrix(std::move(m));
}

} // namespace enbc

#endif // ENBC_KIT_INPUT_HPP
