#include "pgfr/json_out.hpp"

namespace pgfr {

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
}  // namespace

void JsonValue::write(std::string& out) const {
    switch (kind_) {
        case Kind::Object: {
            out += '{';
            bool first = true;
            for (const auto& [k, v] : members_) {
                if (!first) out += ',';
                first = false;
                write_escaped(out, k);
                out += ':';
                v.write(out);
            }
            out += '}';
            break;
        }
        case Kind::Array: {
            out += '[';
            bool first = true;
            for (const auto& v : items_) {
                if (!first) out += ',';
                first = false;
                v.write(out);
            }
            out += ']';
            break;
        }
        case Kind::String:
            write_escaped(out, str_);
            break;
        case Kind::Int: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(int_));
            out += buf;
            break;
        }
        case Kind::Double: {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "%.17g", dbl_);
            out += buf;
            break;
        }
        case Kind::Bool:
            out += bool_ ? "true" : "false";
            break;
    }
}

}  // namespace pgfr
