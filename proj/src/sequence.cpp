#include "swchain/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace swchain {

namespace {

void check_nonnegative(const std::vector<int>& v)
{
    for (int x : v)
        if (x < 0) throw PreconditionViolation("negative degree " + std::to_string(x));
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> tokens(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

int to_int(std::string_view tok)
{
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || v < 0)
        throw ParseError("expected a non-negative decimal integer, got '" + std::string(tok) + "'");
    return v;
}

std::vector<int> int_list(std::string_view s)
{
    std::vector<int> out;
    for (auto t : tokens(s)) out.push_back(to_int(t));
    return out;
}

}  // namespace

DegreeSequence DegreeSequence::uc(std::vector<int> d)
{
    check_nonnegative(d);
    DegreeSequence s;
    s.model = Model::UC;
    s.first = std::move(d);
    return s;
}

DegreeSequence DegreeSequence::bipartite(std::vector<int> a, std::vector<int> b)
{
    check_nonnegative(a);
    check_nonnegative(b);
    DegreeSequence s;
    s.model = Model::Bipartite;
    s.first = std::move(a);
    s.second = std::move(b);
    return s;
}

DegreeSequence DegreeSequence::directed(std::vector<int> out, std::vector<int> in)
{
    check_nonnegative(out);
    check_nonnegative(in);
    if (out.size() != in.size())
        throw PreconditionViolation("out- and in-degree lists differ in length");
    DegreeSequence s;
    s.model = Model::Directed;
    s.first = std::move(out);
    s.second = std::move(in);
    return s;
}

int DegreeSequence::n() const
{
    return model == Model::Bipartite ? n1() + n2() : n1();
}

long DegreeSequence::m() const
{
    long a = std::accumulate(first.begin(), first.end(), 0L);
    return model == Model::UC ? a / 2 : a;
}

int DegreeSequence::max_degree() const
{
    auto d = label_degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

int DegreeSequence::min_degree() const
{
    auto d = label_degrees();
    return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

std::vector<int> DegreeSequence::label_degrees() const
{
    std::vector<int> d = first;
    d.insert(d.end(), second.begin(), second.end());
    return d;
}

int DegreeSequence::label_count() const { return n1() + n2(); }

std::string DegreeSequence::to_text() const
{
    std::ostringstream os;
    os << model_name(model) << ":";
    if (model == Model::Directed) {
        for (int i = 0; i < n1(); ++i) os << ' ' << first[i] << ':' << second[i];
    } else {
        for (int x : first) os << ' ' << x;
        if (model == Model::Bipartite) {
            os << " /";
            for (int x : second) os << ' ' << x;
        }
    }
    return os.str();
}

DegreeSequence parse_degree_sequence(std::string_view text)
{
    std::string_view body = trim(text);
    auto colon = body.find(':');
    if (colon == std::string_view::npos) throw ParseError("missing model tag ('uc:', 'bip:' or 'dir:')");
    std::string_view tag = trim(body.substr(0, colon));
    std::string_view rest = body.substr(colon + 1);
    if (rest.find('\n') != std::string_view::npos) throw ParseError("trailing content after the sequence line");

    if (tag == "uc") {
        auto d = int_list(rest);
        if (d.empty()) throw ParseError("empty degree list");
        return DegreeSequence::uc(std::move(d));
    }
    if (tag == "bip") {
        auto slash = rest.find('/');
        if (slash == std::string_view::npos) throw ParseError("bipartite sequence needs 'a.. / b..'");
        if (rest.find('/', slash + 1) != std::string_view::npos) throw ParseError("more than one '/'");
        auto a = int_list(rest.substr(0, slash));
        auto b = int_list(rest.substr(slash + 1));
        if (a.empty() || b.empty()) throw ParseError("empty bipartite class");
        return DegreeSequence::bipartite(std::move(a), std::move(b));
    }
    if (tag == "dir") {
        std::vector<int> out, in;
        for (auto t : tokens(rest)) {
            auto c = t.find(':');
            if (c == std::string_view::npos || t.find(':', c + 1) != std::string_view::npos)
                throw ParseError("directed entry must be 'out:in', got '" + std::string(t) + "'");
            out.push_back(to_int(t.substr(0, c)));
            in.push_back(to_int(t.substr(c + 1)));
        }
        if (out.empty()) throw ParseError("empty degree list");
        return DegreeSequence::directed(std::move(out), std::move(in));
    }
    throw ParseError("unknown model tag '" + std::string(tag) + "'");
}

DegreeSequence read_degree_sequence_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_degree_sequence(ss.str());
}

}  // namespace swchain
