#include "weingarten/sweep.hpp"

#include "weingarten/numeric.hpp"

namespace weingarten {

std::vector<std::vector<std::string>> sweep_rows(
    const std::vector<double>& values,
    const std::function<std::vector<std::string>(double)>& row_fn) {
    std::vector<std::vector<std::string>> rows(values.size());
    parallel_for(values.size(), [&](std::size_t i) { rows[i] = row_fn(values[i]); });
    return rows;
}

std::vector<std::vector<std::string>> sweep_rows_serial(
    const std::vector<double>& values,
    const std::function<std::vector<std::string>(double)>& row_fn) {
    std::vector<std::vector<std::string>> rows(values.size());
    serial_for(values.size(), [&](std::size_t i) { rows[i] = row_fn(values[i]); });
    return rows;
}

} // namespace weingarten
