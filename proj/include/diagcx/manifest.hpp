#pragma once

#include <chrono>

#include "diagcx/json_io.hpp"

namespace diagcx {

/// Deterministic record of one CLI run: command, parameters, input/output
/// hashes and verdicts.  Wall time is measured but kept out of the
/// serialized manifest so reruns are byte-identical.
struct RunManifest {
    std::string command;
    json parameters = json::object();
    json input_hashes = json::object();
    json output_hashes = json::object();
    json verdicts = json::array();
    double wall_time_ms = 0.0;

    void add_input(const std::string& name, const std::string& bytes) {
        input_hashes[name] = hash_hex(bytes);
    }
    void add_output(const std::string& name, const std::string& bytes) {
        output_hashes[name] = hash_hex(bytes);
    }
    void add_verdict(const std::string& name, bool pass, const std::string& detail = "") {
        json v;
        v["check"] = name;
        v["pass"] = pass;
        if (!detail.empty()) v["detail"] = detail;
        verdicts.push_back(v);
    }

    bool all_pass() const {
        for (auto& v : verdicts)
            if (!v.at("pass").get<bool>()) return false;
        return true;
    }

    json to_json() const {
        json j;
        j["command"] = command;
        j["parameters"] = parameters;
        j["input_hashes"] = input_hashes;
        j["output_hashes"] = output_hashes;
        j["verdicts"] = verdicts;
        return j;
    }

    static std::string hash_hex(const std::string& bytes) {
        char buf[20];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
        return buf;
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace diagcx
