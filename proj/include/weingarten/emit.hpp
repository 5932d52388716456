#ifndef WEINGARTEN_EMIT_HPP
#define WEINGARTEN_EMIT_HPP

#include <string>
#include <utility>
#include <vector>

#include "weingarten/solver.hpp"

namespace weingarten {

// Minimal ordered JSON value with deterministic serialization: keys keep
// insertion order and every float is printed with 17 significant digits, so
// identical configs produce byte-identical reports.
class JsonValue {
public:
    static JsonValue object();
    static JsonValue array();
    static JsonValue str(std::string s);
    static JsonValue num(double v);
    static JsonValue integer(long long v);
    static JsonValue boolean(bool b);
    static JsonValue null();

    JsonValue& set(const std::string& key, JsonValue v); // objects
    JsonValue& push(JsonValue v);                        // arrays

    std::string dump(int indent = 2) const;

private:
    enum class Type { Null, Bool, Int, Num, Str, Arr, Obj };
    Type type_ = Type::Null;
    bool b_ = false;
    long long i_ = 0;
    double n_ = 0.0;
    std::string s_;
    std::vector<JsonValue> arr_;
    std::vector<std::pair<std::string, JsonValue>> obj_;

    void write(std::string& out, int indent, int depth) const;
};

// CSV with mandatory header, "." decimal separator, "\n" line endings.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

// Profile CSV columns: s, rho, drho, h, nu, H, Ke, sigma_sq.
std::string profile_csv(const CanonicalExample& example, std::size_t stride = 1);

// Self-contained SVG polyline plot of the (rho, h) profile with axis ticks
// and a caption; no external renderer or fonts beyond generic sans-serif.
std::string profile_svg(const CanonicalExample& example, const SpaceParams& params,
                        const std::string& class_label);

} // namespace weingarten

#endif
