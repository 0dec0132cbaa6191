#pragma once

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pgfr {

/// Order-preserving JSON value for deterministic report output. Doubles are
/// rendered with 17 significant digits so identical inputs yield identical
/// bytes.
class JsonValue {
public:
    static JsonValue object() { return JsonValue(Kind::Object); }
    static JsonValue array() { return JsonValue(Kind::Array); }
    static JsonValue str(std::string s) {
        JsonValue v(Kind::String);
        v.str_ = std::move(s);
        return v;
    }
    static JsonValue num(std::int64_t i) {
        JsonValue v(Kind::Int);
        v.int_ = i;
        return v;
    }
    static JsonValue num(double d) {
        JsonValue v(Kind::Double);
        v.dbl_ = d;
        return v;
    }
    static JsonValue boolean(bool b) {
        JsonValue v(Kind::Bool);
        v.bool_ = b;
        return v;
    }

    JsonValue& set(const std::string& key, JsonValue v) {
        members_.emplace_back(key, std::move(v));
        return *this;
    }
    JsonValue& push(JsonValue v) {
        items_.push_back(std::move(v));
        return *this;
    }

    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

private:
    enum class Kind { Object, Array, String, Int, Double, Bool };
    explicit JsonValue(Kind k) : kind_(k) {}

    void write(std::string& out) const;

    Kind kind_;
    std::string str_;
    std::int64_t int_ = 0;
    double dbl_ = 0.0;
    bool bool_ = false;
    std::vector<std::pair<std::string, JsonValue>> members_;
    std::vector<JsonValue> items_;
};

}  // namespace pgfr
