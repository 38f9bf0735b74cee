#include "pmhs/jsonio.hpp"

#include "json.hpp"

namespace pmhs {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_or_throw(const std::string& text, const char* what) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string(what) + ": malformed JSON: " + e.what());
    }
}

Int int_field(const ordered_json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_string())
        throw input_error(std::string(what) + ": missing string field '" + key + "'");
    try {
        return Int(j[key].get<std::string>());
    } catch (const std::exception&) {
        throw input_error(std::string(what) + ": field '" + key + "' is not an integer");
    }
}

long long_field(const ordered_json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw input_error(std::string(what) + ": missing integer field '" + key + "'");
    return j[key].get<long>();
}

ordered_json padic_json(const PAdicApprox& x) {
    ordered_json j;
    if (x.is_exact_zero()) {
        if (x.prime() != 0) j["p"] = x.prime().str();
        j["zero"] = true;
        return j;
    }
    j["p"] = x.prime().str();
    if (x.is_zero_class()) {
        j["zero"] = true;
        j["min_val"] = x.val_min();
        return j;
    }
    j["v"] = x.valuation();
    j["unit"] = x.unit().str();
    j["prec"] = x.rel_prec();
    return j;
}

PAdicApprox padic_from(const ordered_json& j) {
    static const char* what = "p-adic value";
    if (!j.is_object()) throw input_error(std::string(what) + ": expected an object");
    if (j.contains("zero")) {
        if (!j["zero"].is_boolean() || !j["zero"].get<bool>())
            throw input_error(std::string(what) + ": field 'zero' must be true");
        Int p = j.contains("p") ? int_field(j, "p", what) : Int(0);
        if (j.contains("min_val")) {
            if (p < 2) throw input_error(std::string(what) + ": zero class needs a prime");
            return PAdicApprox::zero_mod(p, long_field(j, "min_val", what));
        }
        return PAdicApprox::exact_zero(p);
    }
    Int p = int_field(j, "p", what);
    return PAdicApprox::make(p, long_field(j, "v", what), int_field(j, "unit", what),
                             long_field(j, "prec", what));
}

// ---- coefficient adapters -------------------------------------------------

struct RationalCodec {
    static bool is_zero(const Rational& x) { return x == 0; }
    static ordered_json dump(const Rational& x) { return rat_str(x); }
    static Rational load(const ordered_json& j, const char* what) {
        if (!j.is_string())
            throw input_error(std::string(what) + ": expected a rational string");
        return rat_parse(j.get<std::string>());
    }
};

struct PAdicCodec {
    static bool is_zero(const PAdicApprox& x) { return x.is_exact_zero(); }
    static ordered_json dump(const PAdicApprox& x) { return padic_json(x); }
    static PAdicApprox load(const ordered_json& j, const char*) { return padic_from(j); }
};

template <class K, class Codec>
std::string series_dump(const NCSeries<K>& f) {
    ordered_json j;
    j["cap"] = f.cap();
    ordered_json coeffs = ordered_json::object();
    for (int n = 0; n <= f.cap(); ++n)
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
            Word w{n, b};
            const K& c = f.coeff(w);
            if (Codec::is_zero(c)) continue;
            coeffs[w.str()] = Codec::dump(c);
        }
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

template <class K, class Codec>
NCSeries<K> series_load(const std::string& text) {
    static const char* what = "series";
    ordered_json j = parse_or_throw(text, what);
    if (!j.is_object() || !j.contains("cap") || !j["cap"].is_number_integer())
        throw input_error(std::string(what) + ": missing integer field 'cap'");
    int cap = j["cap"].get<int>();
    if (cap < 0 || cap > Word::MAX_LEN)
        throw input_error(std::string(what) + ": cap out of range");
    NCSeries<K> f(cap);
    if (!j.contains("coeffs")) return f;
    if (!j["coeffs"].is_object())
        throw input_error(std::string(what) + ": field 'coeffs' must be an object");
    for (const auto& [key, val] : j["coeffs"].items()) {
        Word w = Word::parse(key);
        if (w.len > cap)
            throw input_error(std::string(what) + ": word '" + key + "' exceeds cap");
        f.coeff(w) = Codec::load(val, what);
    }
    return f;
}

template <class K, class Codec>
std::string harpoint_dump(const HarPoint<K>& h) {
    ordered_json j;
    ordered_json entries = ordered_json::object();
    for (const auto& [s, v] : h.entries) entries[s.str()] = Codec::dump(v);
    j["entries"] = std::move(entries);
    return j.dump();
}

template <class K, class Codec>
HarPoint<K> harpoint_load(const std::string& text) {
    static const char* what = "value table";
    ordered_json j = parse_or_throw(text, what);
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_object())
        throw input_error(std::string(what) + ": missing object field 'entries'");
    HarPoint<K> h;
    for (const auto& [key, val] : j["entries"].items())
        h.set(Composition::parse(key), Codec::load(val, what));
    return h;
}

}  // namespace

std::string padic_to_json(const PAdicApprox& x) { return padic_json(x).dump(); }

PAdicApprox padic_from_json(const std::string& text) {
    return padic_from(parse_or_throw(text, "p-adic value"));
}

std::string series_to_json(const NCSeries<Rational>& f) {
    return series_dump<Rational, RationalCodec>(f);
}
std::string series_to_json(const NCSeries<PAdicApprox>& f) {
    return series_dump<PAdicApprox, PAdicCodec>(f);
}
NCSeries<Rational> series_from_json(const std::string& text) {
    return series_load<Rational, RationalCodec>(text);
}
NCSeries<PAdicApprox> series_from_json_padic(const std::string& text) {
    return series_load<PAdicApprox, PAdicCodec>(text);
}

std::string harpoint_to_json(const HarPoint<Rational>& h) {
    return harpoint_dump<Rational, RationalCodec>(h);
}
std::string harpoint_to_json(const HarPoint<PAdicApprox>& h) {
    return harpoint_dump<PAdicApprox, PAdicCodec>(h);
}
HarPoint<Rational> harpoint_from_json(const std::string& text) {
    return harpoint_load<Rational, RationalCodec>(text);
}
HarPoint<PAdicApprox> harpoint_from_json_padic(const std::string& text) {
    return harpoint_load<PAdicApprox, PAdicCodec>(text);
}

}  // namespace pmhs
