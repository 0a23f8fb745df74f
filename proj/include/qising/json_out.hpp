#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

// Deterministic emission: object keys sorted, floating values formatted with 17
// significant digits, files written atomically (temp + rename). Identical
// config + seed must produce byte-identical output.

namespace qising::jsonout {

class Value;
using Array = std::vector<Value>;
using Object = std::map<std::string, Value>;  // std::map keeps keys sorted

class Value {
public:
    Value() : v_(nullptr) {}
    Value(std::nullptr_t) : v_(nullptr) {}
    Value(bool b) : v_(b) {}
    Value(double d) : v_(d) {}
    Value(int i) : v_(static_cast<std::int64_t>(i)) {}
    Value(std::int64_t i) : v_(i) {}
    Value(const char* s) : v_(std::string(s)) {}
    Value(std::string s) : v_(std::move(s)) {}
    Value(Array a) : v_(std::move(a)) {}
    Value(Object o) : v_(std::move(o)) {}

    void dump(std::string& out) const;

private:
    std::variant<std::nullptr_t, bool, double, std::int64_t, std::string, Array, Object> v_;
};

std::string dump(const Value& v);

/// %.17g with nan/inf mapped to null (they never appear in valid outputs).
std::string format_double(double d);

void write_atomic(const std::string& path, const std::string& content);

/// CSV row formatting with the same float contract.
std::string csv_row(const std::vector<std::string>& cells);

}  // namespace qising::jsonout
