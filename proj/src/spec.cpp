#include "sdfkit/spec.hpp"

#include <cctype>
#include <map>

#include "sdfkit/constructions.hpp"
#include "sdfkit/error.hpp"
#include "sdfkit/hom.hpp"

namespace sdfkit {

namespace {

[[noreturn]] void fail(std::string_view spec, const std::string& why) {
    throw Error(ErrorCode::ParseError, "ring spec \"" + std::string(spec) + "\": " + why);
}

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

class Parser {
public:
    explicit Parser(const Limits& lim) : lim_(lim) {}

    RingPtr ring(const std::string& spec) {
        if (auto it = memo_.find(spec); it != memo_.end()) return it->second;
        RingPtr r = build(spec);
        memo_.emplace(spec, r);
        return r;
    }

private:
    RingPtr build(const std::string& spec) {
        if (spec.empty()) fail(spec, "empty");
        auto factors = split_top_level(spec, 'x');
        if (factors.size() > 1) {
            RingPtr acc = factor(factors[0]);
            for (std::size_t k = 1; k < factors.size(); ++k) {
                acc = make_product(acc, factor(factors[k]), lim_).ring;
            }
            return acc;
        }
        return factor(spec);
    }

    RingPtr factor(const std::string& f) {
        if (f.empty()) fail(f, "empty factor");
        if (f.front() == '(') {
            if (f.back() != ')') fail(f, "unbalanced parentheses");
            return ring(f.substr(1, f.size() - 2));
        }
        if (f.front() == 'Z' && f.size() > 1 &&
            std::all_of(f.begin() + 1, f.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            if (f.size() > 10) fail(f, "modulus too large");
            return make_zn(std::stoull(f.substr(1)), lim_);
        }
        const auto open = f.find('(');
        if (open == std::string::npos || f.back() != ')') fail(f, "unknown ring");
        const std::string head = f.substr(0, open);
        const auto args = split_top_level(std::string_view(f).substr(open + 1, f.size() - open - 2), ',');
        auto need = [&](std::size_t n) {
            if (args.size() < n) fail(f, head + " needs at least " + std::to_string(n) + " arguments");
        };
        auto join_from = [&](std::size_t k) {
            std::string out;
            for (std::size_t i = k; i < args.size(); ++i) {
                if (i > k) out += ",";
                out += args[i];
            }
            return out;
        };
        if (head == "Q") {
            need(2);
            return make_quotient(parse_ideal(ring(args[0]), join_from(1)), lim_).ring;
        }
        if (head == "Idl") {
            need(2);
            return idealize(ModuleSpec::quotient_by(parse_ideal(ring(args[0]), join_from(1))), lim_).ring;
        }
        if (head == "Loc") {
            need(2);
            RingPtr base = ring(args[0]);
            return localize(MultSet::generated(base, parse_elements(base, join_from(1))), lim_).ring;
        }
        if (head == "TP") {
            if (args.size() != 2 || args[1].empty() ||
                !std::all_of(args[1].begin(), args[1].end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
                args[1].size() > 4) {
                fail(f, "TP needs a ring and a truncation degree");
            }
            return trunc_poly(ring(args[0]), static_cast<unsigned>(std::stoul(args[1])), lim_).ring;
        }
        if (head == "Am") {
            need(4);
            RingPtr r = ring(args[0]);
            RingPtr s = ring(args[1]);
            const std::string& tok = args[2];
            std::optional<RingHom> phi;
            if (tok == "id") {
                if (!same_ring(r, s)) fail(f, "id needs the same source and target");
                phi = identity_hom(r);
            } else if (tok == "can") {
                phi = canonical_hom(r, s);
            } else if (tok.size() >= 2 && tok.front() == '{' && tok.back() == '}') {
                auto images = split_top_level(std::string_view(tok).substr(1, tok.size() - 2), ';');
                if (images.size() != r->order()) {
                    fail(f, "hom table lists " + std::to_string(images.size()) + " images for " +
                                std::to_string(r->order()) + " elements");
                }
                std::vector<Elem> map;
                for (const auto& img : images) map.push_back(parse_elements(s, img).at(0));
                phi = make_hom(r, s, std::move(map));
            } else {
                fail(f, "unknown hom token \"" + tok + "\"");
            }
            return amalgamate(*phi, parse_ideal(s, join_from(3)), lim_).ring;
        }
        fail(f, "unknown constructor \"" + head + "\"");
    }

    const Limits& lim_;
    std::map<std::string, RingPtr> memo_;
};

}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char sep) {
    std::vector<std::string> out(1);
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') {
            if (--depth < 0) fail(text, "unbalanced brackets");
        }
        if (c == sep && depth == 0) {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    if (depth != 0) fail(text, "unbalanced brackets");
    return out;
}

RingPtr parse_ring(std::string_view spec, const Limits& lim) {
    Parser p(lim);
    return p.ring(strip(spec));
}

std::vector<Elem> parse_elements(const RingPtr& r, std::string_view labels) {
    std::vector<Elem> out;
    for (const auto& l : split_top_level(strip(labels), ',')) {
        auto e = r->find_label(l);
        if (!e) fail(labels, "no element labelled \"" + l + "\" in " + r->spec());
        out.push_back(*e);
    }
    return out;
}

Ideal parse_ideal(const RingPtr& r, std::string_view gens) {
    return ideal_from_generators(r, parse_elements(r, gens));
}

}  // namespace sdfkit
