#ifndef MYC_VERTEX_NAME_HPP
#define MYC_VERTEX_NAME_HPP

#include <charconv>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace myc {

enum class NameKind { Initial, Root };

// Structured vertex name: x<base> or u<level>, optionally carrying a suffix of
// iterated-twin indices. Serialized as e.g. "x3^1.1" or "u1^2.1".
struct VertexName {
    NameKind kind = NameKind::Initial;
    int index = 1;  // base index for Initial, level for Root
    std::vector<int> suffix;

    int suffix_sum() const {
        return std::accumulate(suffix.begin(), suffix.end(), 0);
    }

    // Level-plus-suffix total for roots, suffix sum for initial vertices.
    int total() const {
        return suffix_sum() + (kind == NameKind::Root ? index : 0);
    }

    VertexName with_appended(int i) const {
        if (i <= 0) throw std::invalid_argument("vertex name: nonpositive suffix entry");
        VertexName r = *this;
        r.suffix.push_back(i);
        return r;
    }

    VertexName with_last_dropped() const {
        if (suffix.empty())
            throw std::invalid_argument("vertex name: empty suffix, nothing to drop");
        VertexName r = *this;
        r.suffix.pop_back();
        return r;
    }

    // True when other = this + a nonempty suffix extension.
    bool is_proper_prefix_of(const VertexName& other) const {
        if (kind != other.kind || index != other.index) return false;
        if (suffix.size() >= other.suffix.size()) return false;
        return std::equal(suffix.begin(), suffix.end(), other.suffix.begin());
    }

    std::string str() const {
        std::string s = (kind == NameKind::Initial ? "x" : "u");
        s += std::to_string(index);
        if (!suffix.empty()) {
            s += '^';
            for (size_t i = 0; i < suffix.size(); ++i) {
                if (i) s += '.';
                s += std::to_string(suffix[i]);
            }
        }
        return s;
    }

    static VertexName parse(std::string_view sv) {
        auto fail = [&] {
            throw std::invalid_argument("vertex name: cannot parse '" + std::string(sv) + "'");
        };
        if (sv.empty()) fail();
        VertexName r;
        if (sv[0] == 'x')
            r.kind = NameKind::Initial;
        else if (sv[0] == 'u')
            r.kind = NameKind::Root;
        else
            fail();
        size_t pos = 1;
        auto read_int = [&](int& out) {
            auto [p, ec] = std::from_chars(sv.data() + pos, sv.data() + sv.size(), out);
            if (ec != std::errc{} || out <= 0) fail();
            pos = static_cast<size_t>(p - sv.data());
        };
        read_int(r.index);
        if (pos < sv.size()) {
            if (sv[pos] != '^') fail();
            ++pos;
            while (true) {
                int v = 0;
                read_int(v);
                r.suffix.push_back(v);
                if (pos == sv.size()) break;
                if (sv[pos] != '.') fail();
                ++pos;
            }
        }
        return r;
    }

    friend auto operator<=>(const VertexName& a, const VertexName& b) = default;
};

}  // namespace myc

#endif
