#include "weingarten/emit.hpp"

#include <algorithm>
#include <cmath>

#include "weingarten/numeric.hpp"

namespace weingarten {

JsonValue JsonValue::object() {
    JsonValue v;
    v.type_ = Type::Obj;
    return v;
}
JsonValue JsonValue::array() {
    JsonValue v;
    v.type_ = Type::Arr;
    return v;
}
JsonValue JsonValue::str(std::string s) {
    JsonValue v;
    v.type_ = Type::Str;
    v.s_ = std::move(s);
    return v;
}
JsonValue JsonValue::num(double x) {
    JsonValue v;
    v.type_ = Type::Num;
    v.n_ = x;
    return v;
}
JsonValue JsonValue::integer(long long x) {
    JsonValue v;
    v.type_ = Type::Int;
    v.i_ = x;
    return v;
}
JsonValue JsonValue::boolean(bool b) {
    JsonValue v;
    v.type_ = Type::Bool;
    v.b_ = b;
    return v;
}
JsonValue JsonValue::null() { return JsonValue{}; }

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
    obj_.emplace_back(key, std::move(v));
    return *this;
}
JsonValue& JsonValue::push(JsonValue v) {
    arr_.push_back(std::move(v));
    return *this;
}

namespace {
void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}
} // namespace

void JsonValue::write(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad1(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (type_) {
        case Type::Null: out += "null"; return;
        case Type::Bool: out += b_ ? "true" : "false"; return;
        case Type::Int: out += std::to_string(i_); return;
        case Type::Num:
            if (std::isfinite(n_))
                out += format_double(n_);
            else
                out += n_ > 0 ? "\"inf\"" : (n_ < 0 ? "\"-inf\"" : "\"nan\"");
            return;
        case Type::Str: write_escaped(out, s_); return;
        case Type::Arr: {
            if (arr_.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < arr_.size(); ++i) {
                out += pad1;
                arr_[i].write(out, indent, depth + 1);
                if (i + 1 < arr_.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            return;
        }
        case Type::Obj: {
            if (obj_.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            for (std::size_t i = 0; i < obj_.size(); ++i) {
                out += pad1;
                write_escaped(out, obj_[i].first);
                out += ": ";
                obj_[i].second.write(out, indent, depth + 1);
                if (i + 1 < obj_.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            return;
        }
    }
}

std::string JsonValue::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    out += '\n';
    return out;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

std::string profile_csv(const CanonicalExample& example, std::size_t stride) {
    if (stride == 0) stride = 1;
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < example.samples.size(); i += stride) {
        const SampleRow& r = example.samples[i];
        rows.push_back({format_double(r.s), format_double(r.rho), format_double(r.drho),
                        format_double(r.h), format_double(r.nu), format_double(r.H),
                        format_double(r.Ke), format_double(r.sigma_sq)});
    }
    // always include the final sample
    if (!example.samples.empty() && (example.samples.size() - 1) % stride != 0) {
        const SampleRow& r = example.samples.back();
        rows.push_back({format_double(r.s), format_double(r.rho), format_double(r.drho),
                        format_double(r.h), format_double(r.nu), format_double(r.H),
                        format_double(r.Ke), format_double(r.sigma_sq)});
    }
    return csv_table({"s", "rho", "drho", "h", "nu", "H", "Ke", "sigma_sq"}, rows);
}

namespace {
std::string svg_coord(double x) {
    // plot coordinates stay deterministic but short
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}
} // namespace

std::string profile_svg(const CanonicalExample& example, const SpaceParams& params,
                        const std::string& class_label) {
    const double W = 640.0, H = 480.0, margin = 56.0;
    double rmin = 0.0, rmax = 0.0, hmin = 0.0, hmax = 0.0;
    for (const SampleRow& r : example.samples) {
        rmin = std::fmin(rmin, r.rho);
        rmax = std::fmax(rmax, r.rho);
        hmin = std::fmin(hmin, r.h);
        hmax = std::fmax(hmax, r.h);
    }
    if (rmax - rmin < 1e-12) rmax = rmin + 1.0;
    if (hmax - hmin < 1e-12) hmax = hmin + 1.0;
    auto X = [&](double rho) { return margin + (rho - rmin) / (rmax - rmin) * (W - 2 * margin); };
    auto Y = [&](double h) { return H - margin - (h - hmin) / (hmax - hmin) * (H - 2 * margin); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 480\" width=\"640\" height=\"480\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
    // axes
    svg += "<line x1=\"" + svg_coord(margin) + "\" y1=\"" + svg_coord(H - margin) + "\" x2=\"" +
           svg_coord(W - margin) + "\" y2=\"" + svg_coord(H - margin) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + svg_coord(margin) + "\" y1=\"" + svg_coord(margin) + "\" x2=\"" +
           svg_coord(margin) + "\" y2=\"" + svg_coord(H - margin) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fr = i / 5.0;
        const double rho = rmin + fr * (rmax - rmin);
        const double hh = hmin + fr * (hmax - hmin);
        svg += "<line x1=\"" + svg_coord(X(rho)) + "\" y1=\"" + svg_coord(H - margin) + "\" x2=\"" +
               svg_coord(X(rho)) + "\" y2=\"" + svg_coord(H - margin + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + svg_coord(X(rho)) + "\" y=\"" + svg_coord(H - margin + 18) +
               "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">" +
               svg_coord(rho) + "</text>\n";
        svg += "<line x1=\"" + svg_coord(margin - 5) + "\" y1=\"" + svg_coord(Y(hh)) + "\" x2=\"" +
               svg_coord(margin) + "\" y2=\"" + svg_coord(Y(hh)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + svg_coord(margin - 8) + "\" y=\"" + svg_coord(Y(hh) + 3) +
               "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">" +
               svg_coord(hh) + "</text>\n";
    }
    svg += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < example.samples.size(); ++i) {
        if (i) svg += ' ';
        svg += svg_coord(X(example.samples[i].rho)) + "," + svg_coord(Y(example.samples[i].h));
    }
    svg += "\"/>\n";
    svg += "<text x=\"320\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">";
    svg += "profile curve (rho, h): kappa=" + format_double(params.kappa) +
           ", tau=" + format_double(params.tau) + ", " + class_label;
    svg += "</text>\n";
    svg += "<text x=\"320\" y=\"470\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">rho</text>\n";
    svg += "<text x=\"14\" y=\"240\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" transform=\"rotate(-90 14 240)\">h</text>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace weingarten
