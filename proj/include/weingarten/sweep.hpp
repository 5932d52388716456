#ifndef WEINGARTEN_SWEEP_HPP
#define WEINGARTEN_SWEEP_HPP

#include <functional>
#include <string>
#include <vector>

namespace weingarten {

// Maps row_fn over the values, evaluating rows concurrently (OpenMP when
// available and WEINGARTEN_SERIAL is unset) but assembling output in input
// order, so the table bytes never depend on the schedule. row_fn must not
// throw; per-row errors belong in the row's error column.
std::vector<std::vector<std::string>> sweep_rows(
    const std::vector<double>& values,
    const std::function<std::vector<std::string>(double)>& row_fn);

// Serial reference implementation used by the tests and the benchmark.
std::vector<std::vector<std::string>> sweep_rows_serial(
    const std::vector<double>& values,
    const std::function<std::vector<std::string>(double)>& row_fn);

} // namespace weingarten

#endif
