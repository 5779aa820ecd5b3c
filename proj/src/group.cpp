#include "gcover/group.hpp"

#include "gcover/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace gcover {

GroupSpec GroupSpec::cyclic(int r)
{
    return abelian({r});
}

GroupSpec GroupSpec::abelian(std::vector<int> orders)
{
    if (orders.empty())
        throw ParameterError("abelian group needs at least one cyclic factor");
    std::int64_t total = 1;
    for (int r : orders) {
        if (r < 2)
            throw ParameterError("cyclic factor orders must be at least 2");
        total *= r;
        if (total > (1 << 20))
            throw ParameterError("abelian group too large");
    }
    GroupSpec g;
    g.kind_ = Kind::abelian;
    g.orders_ = std::move(orders);
    return g;
}

GroupSpec GroupSpec::permutation(int degree)
{
    if (degree < 1 || degree > 64)
        throw ParameterError("permutation degree out of range");
    GroupSpec g;
    g.kind_ = Kind::permutation;
    g.degree_ = degree;
    return g;
}

int GroupSpec::sheets() const noexcept
{
    if (kind_ == Kind::permutation)
        return degree_;
    return std::accumulate(orders_.begin(), orders_.end(), 1, std::multiplies<>());
}

std::int64_t GroupSpec::order() const
{
    if (kind_ != Kind::abelian)
        throw UnsupportedError("group order is only tracked for abelian groups");
    return sheets();
}

GroupElement GroupSpec::identity() const
{
    if (kind_ == Kind::abelian)
        return {std::vector<int>(orders_.size(), 0)};
    GroupElement e;
    e.values.resize(static_cast<std::size_t>(degree_));
    std::iota(e.values.begin(), e.values.end(), 0);
    return e;
}

bool GroupSpec::is_identity(const GroupElement& g) const
{
    return g == identity();
}

bool GroupSpec::contains(const GroupElement& g) const
{
    if (kind_ == Kind::abelian) {
        if (g.values.size() != orders_.size())
            return false;
        for (std::size_t i = 0; i < orders_.size(); ++i)
            if (g.values[i] < 0 || g.values[i] >= orders_[i])
                return false;
        return true;
    }
    if (static_cast<int>(g.values.size()) != degree_)
        return false;
    std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
    for (int x : g.values) {
        if (x < 0 || x >= degree_ || seen[static_cast<std::size_t>(x)])
            return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

GroupElement GroupSpec::compose(const GroupElement& a, const GroupElement& b) const
{
    GroupElement out;
    out.values.resize(a.values.size());
    if (kind_ == Kind::abelian) {
        for (std::size_t i = 0; i < orders_.size(); ++i)
            out.values[i] = (a.values[i] + b.values[i]) % orders_[i];
    } else {
        for (std::size_t j = 0; j < a.values.size(); ++j)
            out.values[j] = a.values[static_cast<std::size_t>(b.values[j])];
    }
    return out;
}

GroupElement GroupSpec::inverse(const GroupElement& g) const
{
    GroupElement out;
    out.values.resize(g.values.size());
    if (kind_ == Kind::abelian) {
        for (std::size_t i = 0; i < orders_.size(); ++i)
            out.values[i] = (orders_[i] - g.values[i]) % orders_[i];
    } else {
        for (std::size_t j = 0; j < g.values.size(); ++j)
            out.values[static_cast<std::size_t>(g.values[j])] = static_cast<int>(j);
    }
    return out;
}

int GroupSpec::act(const GroupElement& g, int sheet) const
{
    if (kind_ == Kind::permutation)
        return g.values[static_cast<std::size_t>(sheet)];
    return static_cast<int>(index_of(compose(g, element_at(sheet))));
}

GroupElement GroupSpec::element_at(std::int64_t index) const
{
    if (kind_ != Kind::abelian)
        throw UnsupportedError("element enumeration is only defined for abelian groups");
    GroupElement g;
    g.values.resize(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
        g.values[i] = static_cast<int>(index % orders_[i]);
        index /= orders_[i];
    }
    return g;
}

std::int64_t GroupSpec::index_of(const GroupElement& g) const
{
    if (kind_ != Kind::abelian)
        throw UnsupportedError("element indexing is only defined for abelian groups");
    std::int64_t index = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        index = index * orders_[i] + g.values[i];
    return index;
}

std::string GroupSpec::describe() const
{
    if (kind_ == Kind::permutation)
        return "perm " + std::to_string(degree_);
    if (orders_.size() == 1)
        return "cyclic " + std::to_string(orders_[0]);
    std::string s = "abelian";
    for (int r : orders_)
        s += " " + std::to_string(r);
    return s;
}

std::string GroupSpec::format(const GroupElement& g) const
{
    std::string s;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(g.values[i]);
    }
    return s;
}

GroupElement GroupSpec::parse(const std::string& text) const
{
    GroupElement g;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p < end) {
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{})
            throw ParameterError("malformed group element '" + text + "'");
        g.values.push_back(value);
        p = next;
        if (p < end) {
            if (*p != ',')
                throw ParameterError("malformed group element '" + text + "'");
            ++p;
            if (p == end)
                throw ParameterError("malformed group element '" + text + "'");
        }
    }
    if (!contains(g))
        throw ParameterError("'" + text + "' is not an element of " + describe());
    return g;
}

} // namespace gcover
