#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeroapn {

using bigint = boost::multiprecision::cpp_int;

// Integer expression over named parameters. Grammar (C-like precedence):
//   || && !  == != < <= > >=  + -  * / %  unary -  ^ (right assoc)
//   gcd(a,b) abs(a) min(a,b) max(a,b) literals identifiers ( )
// Truth values are 0/1. gcd uses absolute values, gcd(a, 0) = |a|.
class Expr {
public:
    Expr() = default;
    static Expr parse(std::string_view text);

    bigint eval(const std::map<std::string, bigint>& env) const;
    bool truthy(const std::map<std::string, bigint>& env) const { return eval(env) != 0; }
    const std::string& text() const { return text_; }
    bool empty() const { return !root_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

} // namespace zeroapn
