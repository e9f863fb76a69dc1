#include <ofms/io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ofms {

using nlohmann::json;

namespace {

QNum parse_field(const json& value, const char* key, int index) {
    try {
        if (value.is_string()) return QNum::parse(value.get<std::string>());
        if (value.is_number_integer()) return QNum(value.get<long>());
    } catch (const std::exception& e) {
        std::ostringstream msg;
        msg << "task " << index << ": bad \"" << key << "\": " << e.what();
        throw IoError(msg.str());
    }
    std::ostringstream msg;
    msg << "task " << index << ": \"" << key << "\" must be an encoded number string";
    throw IoError(msg.str());
}

} // namespace

Tap<QNum> parse_tap_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("TAP file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("tasks") || !doc["tasks"].is_array()) {
        throw IoError("TAP file must be an object with a \"tasks\" array");
    }
    Tap<QNum> tap;
    int id = 0;
    for (const json& item : doc["tasks"]) {
        if (!item.is_object()) throw IoError("task entries must be objects");
        for (const char* key : {"f", "s", "t"}) {
            if (!item.contains(key)) {
                std::ostringstream msg;
                msg << "task " << id << ": missing \"" << key << "\"";
                throw IoError(msg.str());
            }
        }
        Task<QNum> task;
        task.id = id;
        task.fast_runtime = parse_field(item["f"], "f", id);
        task.slow_runtime = parse_field(item["s"], "s", id);
        task.arrival = parse_field(item["t"], "t", id);
        tap.tasks.push_back(std::move(task));
        ++id;
    }
    if (auto violation = validate_tap(tap)) {
        throw IoError("invalid TAP: " + *violation);
    }
    return tap;
}

std::string tap_to_json(const Tap<QNum>& tap) {
    json tasks = json::array();
    for (const auto& task : tap.tasks) {
        tasks.push_back({{"f", task.fast_runtime.str()},
                         {"s", task.slow_runtime.str()},
                         {"t", task.arrival.str()}});
    }
    return json{{"tasks", tasks}}.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

Tap<QNum> read_tap_file(const std::string& path) {
    return parse_tap_json(read_text_file(path));
}

void write_tap_file(const std::string& path, const Tap<QNum>& tap) {
    write_text_file(path, tap_to_json(tap));
}

std::uint64_t tap_digest(const Tap<QNum>& tap) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    auto mix = [&hash](const std::string& s) {
        for (unsigned char c : s) {
            hash ^= c;
            hash *= 0x100000001b3ull;
        }
        hash ^= ';';
        hash *= 0x100000001b3ull;
    };
    for (const auto& task : tap.tasks) {
        mix(task.fast_runtime.str());
        mix(task.slow_runtime.str());
        mix(task.arrival.str());
    }
    return hash;
}

std::string digest_hex(std::uint64_t digest) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

} // namespace ofms
