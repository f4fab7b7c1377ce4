#include "reprcount/checkpoint.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace reprcount {

namespace {

using json = nlohmann::ordered_json;

constexpr u64 kFnvOffset = 14695981039346656037ull;
constexpr u64 kFnvPrime = 1099511628211ull;

u64 fnv1a(const std::string& bytes, u64 seed) {
    u64 h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

void put_u64(std::string& s, u64 v) {
    for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_f64(std::string& s, double d) { put_u64(s, std::bit_cast<u64>(d)); }

u64 get_u64(const std::string& s, size_t& pos) {
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= u64(static_cast<unsigned char>(s[pos + i])) << (8 * i);
    pos += 8;
    return v;
}
double get_f64(const std::string& s, size_t& pos) { return std::bit_cast<double>(get_u64(s, pos)); }

std::string hex64(u64 v) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
    return buf;
}
u64 parse_hex64(const std::string& s) { return std::stoull(s, nullptr, 16); }

// Packed payloads.  Field order for a state record follows the documented
// convention: x, count1, count3, lam1+comp, lam3+comp, mu1+comp, mu3+comp,
// then the margin/exception extension.
std::string pack_row(const SampleRow& r) {
    std::string p;
    put_u64(p, r.x);
    put_u64(p, r.b1);
    put_u64(p, r.b3);
    put_f64(p, r.lam1);
    put_f64(p, r.lam3);
    put_f64(p, r.mu1);
    put_f64(p, r.mu3);
    return p;
}

std::string pack_state(const RunningTotals& t) {
    std::string p;
    put_u64(p, t.x);
    put_u64(p, t.count1);
    put_u64(p, t.count3);
    for (const Kahan* k : {&t.lam1, &t.lam3, &t.mu1, &t.mu3}) {
        put_f64(p, k->sum);
        put_f64(p, k->comp);
    }
    for (const Margin* m : {&t.margin_count, &t.margin_lambda, &t.margin_mu}) {
        put_f64(p, m->slack);
        put_u64(p, m->x);
        p.push_back(m->seen ? 1 : 0);
    }
    put_u64(p, t.sub8_lambda_exceptions.size());
    for (u64 e : t.sub8_lambda_exceptions) put_u64(p, e);
    put_u64(p, t.violations.size());
    for (const Violation& v : t.violations) {
        put_u64(p, v.x);
        put_u64(p, static_cast<u64>(v.which));
    }
    return p;
}

void unpack_state(const std::string& p, RunningTotals& t) {
    size_t pos = 0;
    t.x = get_u64(p, pos);
    t.count1 = get_u64(p, pos);
    t.count3 = get_u64(p, pos);
    for (Kahan* k : {&t.lam1, &t.lam3, &t.mu1, &t.mu3}) {
        k->sum = get_f64(p, pos);
        k->comp = get_f64(p, pos);
    }
    for (Margin* m : {&t.margin_count, &t.margin_lambda, &t.margin_mu}) {
        m->slack = get_f64(p, pos);
        m->x = get_u64(p, pos);
        m->seen = p[pos++] != 0;
    }
    t.sub8_lambda_exceptions.resize(get_u64(p, pos));
    for (u64& e : t.sub8_lambda_exceptions) e = get_u64(p, pos);
    t.violations.resize(get_u64(p, pos));
    for (Violation& v : t.violations) {
        v.x = get_u64(p, pos);
        v.which = static_cast<int>(get_u64(p, pos));
    }
    if (pos != p.size()) throw std::runtime_error("checkpoint: trailing bytes in state record");
}

constexpr char kMagic[9] = "RCCKPT01";

}  // namespace

CheckpointWriter::CheckpointWriter(std::string path, CheckpointFormat fmt, u64 segment_len)
    : path_(std::move(path)), fmt_(fmt), checksum_(kFnvOffset) {
    std::ofstream out(path_, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("checkpoint: cannot open " + path_);
    if (fmt_ == CheckpointFormat::binary) {
        out.write(kMagic, 8);
        std::string hdr;
        put_u64(hdr, 1);  // format version
        put_u64(hdr, segment_len);
        out.write(hdr.data(), static_cast<std::streamsize>(hdr.size()));
    } else {
        json h = {{"type", "header"}, {"magic", kMagic}, {"version", 1}, {"segment_len", segment_len}};
        out << h.dump() << "\n";
    }
}

CheckpointWriter::CheckpointWriter(std::string path, CheckpointFormat fmt, u64 resume_checksum, int)
    : path_(std::move(path)), fmt_(fmt), checksum_(resume_checksum) {
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("checkpoint: cannot open " + path_);
}

void CheckpointWriter::row(const SampleRow& r) {
    const std::string payload = pack_row(r);
    checksum_ = fnv1a(payload, checksum_);
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (fmt_ == CheckpointFormat::binary) {
        std::string rec;
        rec.push_back('R');
        put_u64(rec, payload.size());
        rec += payload;
        put_u64(rec, checksum_);
        out.write(rec.data(), static_cast<std::streamsize>(rec.size()));
    } else {
        json j = {{"type", "row"},
                  {"x", r.x},
                  {"B1", r.b1},
                  {"B3", r.b3},
                  {"lambda1_bits", hex64(std::bit_cast<u64>(r.lam1))},
                  {"lambda3_bits", hex64(std::bit_cast<u64>(r.lam3))},
                  {"mu1_bits", hex64(std::bit_cast<u64>(r.mu1))},
                  {"mu3_bits", hex64(std::bit_cast<u64>(r.mu3))},
                  {"checksum", hex64(checksum_)}};
        out << j.dump() << "\n";
    }
    out.flush();
}

void CheckpointWriter::boundary(const RunningTotals& t) {
    const std::string payload = pack_state(t);
    checksum_ = fnv1a(payload, checksum_);
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (fmt_ == CheckpointFormat::binary) {
        std::string rec;
        rec.push_back('S');
        put_u64(rec, payload.size());
        rec += payload;
        put_u64(rec, checksum_);
        out.write(rec.data(), static_cast<std::streamsize>(rec.size()));
    } else {
        json j;
        j["type"] = "state";
        j["x"] = t.x;
        j["count1"] = t.count1;
        j["count3"] = t.count3;
        const char* names[4] = {"lam1", "lam3", "mu1", "mu3"};
        const Kahan* ks[4] = {&t.lam1, &t.lam3, &t.mu1, &t.mu3};
        for (int i = 0; i < 4; ++i) {
            j[std::string(names[i]) + "_bits"] = hex64(std::bit_cast<u64>(ks[i]->sum));
            j[std::string(names[i]) + "_comp_bits"] = hex64(std::bit_cast<u64>(ks[i]->comp));
        }
        const char* mn[3] = {"margin_count", "margin_lambda", "margin_mu"};
        const Margin* ms[3] = {&t.margin_count, &t.margin_lambda, &t.margin_mu};
        for (int i = 0; i < 3; ++i) {
            j[std::string(mn[i]) + "_bits"] = hex64(std::bit_cast<u64>(ms[i]->slack));
            j[std::string(mn[i]) + "_x"] = ms[i]->x;
            j[std::string(mn[i]) + "_seen"] = ms[i]->seen;
        }
        j["sub8_exceptions"] = t.sub8_lambda_exceptions;
        json viol = json::array();
        for (const Violation& v : t.violations) viol.push_back({{"x", v.x}, {"which", v.which}});
        j["violations"] = viol;
        j["checksum"] = hex64(checksum_);
        out << j.dump() << "\n";
    }
    out.flush();
}

CheckpointState load_checkpoint(const std::string& path, CheckpointFormat fmt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("checkpoint: cannot open " + path);
    CheckpointState st;
    u64 checksum = kFnvOffset;
    bool have_state = false;

    if (fmt == CheckpointFormat::binary) {
        char magic[8];
        if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0)
            throw std::runtime_error("checkpoint: bad magic");
        std::string hdr(16, '\0');
        if (!in.read(hdr.data(), 16)) throw std::runtime_error("checkpoint: truncated header");
        size_t pos = 0;
        if (get_u64(hdr, pos) != 1) throw std::runtime_error("checkpoint: unsupported version");
        st.segment_len = get_u64(hdr, pos);
        while (true) {
            char type;
            if (!in.read(&type, 1)) break;
            std::string lenb(8, '\0');
            if (!in.read(lenb.data(), 8)) throw std::runtime_error("checkpoint: truncated record");
            size_t lp = 0;
            const u64 len = get_u64(lenb, lp);
            if (len > (1u << 20)) throw std::runtime_error("checkpoint: implausible record length");
            std::string payload(len, '\0');
            std::string ckb(8, '\0');
            if (!in.read(payload.data(), static_cast<std::streamsize>(len)) || !in.read(ckb.data(), 8))
                throw std::runtime_error("checkpoint: truncated record");
            checksum = fnv1a(payload, checksum);
            size_t cp = 0;
            if (get_u64(ckb, cp) != checksum) throw std::runtime_error("checkpoint: checksum mismatch");
            if (type == 'R') {
                SampleRow r;
                size_t rp = 0;
                r.x = get_u64(payload, rp);
                r.b1 = get_u64(payload, rp);
                r.b3 = get_u64(payload, rp);
                r.lam1 = get_f64(payload, rp);
                r.lam3 = get_f64(payload, rp);
                r.mu1 = get_f64(payload, rp);
                r.mu3 = get_f64(payload, rp);
                st.rows.push_back(r);
            } else if (type == 'S') {
                unpack_state(payload, st.totals);
                have_state = true;
            } else {
                throw std::runtime_error("checkpoint: unknown record type");
            }
        }
    } else {
        std::string line;
        if (!std::getline(in, line)) throw std::runtime_error("checkpoint: empty file");
        json h = json::parse(line);
        if (h.value("type", "") != "header" || h.value("magic", "") != kMagic ||
            h.value("version", 0) != 1)
            throw std::runtime_error("checkpoint: bad header");
        st.segment_len = h.value("segment_len", u64(0));
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json j = json::parse(line);
            const std::string type = j.value("type", "");
            if (type == "row") {
                SampleRow r;
                r.x = j.at("x").get<u64>();
                r.b1 = j.at("B1").get<u64>();
                r.b3 = j.at("B3").get<u64>();
                r.lam1 = std::bit_cast<double>(parse_hex64(j.at("lambda1_bits").get<std::string>()));
                r.lam3 = std::bit_cast<double>(parse_hex64(j.at("lambda3_bits").get<std::string>()));
                r.mu1 = std::bit_cast<double>(parse_hex64(j.at("mu1_bits").get<std::string>()));
                r.mu3 = std::bit_cast<double>(parse_hex64(j.at("mu3_bits").get<std::string>()));
                checksum = fnv1a(pack_row(r), checksum);
                if (parse_hex64(j.at("checksum").get<std::string>()) != checksum)
                    throw std::runtime_error("checkpoint: checksum mismatch");
                st.rows.push_back(r);
            } else if (type == "state") {
                RunningTotals t;
                t.x = j.at("x").get<u64>();
                t.count1 = j.at("count1").get<u64>();
                t.count3 = j.at("count3").get<u64>();
                const char* names[4] = {"lam1", "lam3", "mu1", "mu3"};
                Kahan* ks[4] = {&t.lam1, &t.lam3, &t.mu1, &t.mu3};
                for (int i = 0; i < 4; ++i) {
                    ks[i]->sum = std::bit_cast<double>(
                        parse_hex64(j.at(std::string(names[i]) + "_bits").get<std::string>()));
                    ks[i]->comp = std::bit_cast<double>(
                        parse_hex64(j.at(std::string(names[i]) + "_comp_bits").get<std::string>()));
                }
                const char* mn[3] = {"margin_count", "margin_lambda", "margin_mu"};
                Margin* ms[3] = {&t.margin_count, &t.margin_lambda, &t.margin_mu};
                for (int i = 0; i < 3; ++i) {
                    ms[i]->slack = std::bit_cast<double>(
                        parse_hex64(j.at(std::string(mn[i]) + "_bits").get<std::string>()));
                    ms[i]->x = j.at(std::string(mn[i]) + "_x").get<u64>();
                    ms[i]->seen = j.at(std::string(mn[i]) + "_seen").get<bool>();
                }
                t.sub8_lambda_exceptions = j.at("sub8_exceptions").get<std::vector<u64>>();
                for (const auto& v : j.at("violations"))
                    t.violations.push_back({v.at("x").get<u64>(), v.at("which").get<int>()});
                checksum = fnv1a(pack_state(t), checksum);
                if (parse_hex64(j.at("checksum").get<std::string>()) != checksum)
                    throw std::runtime_error("checkpoint: checksum mismatch");
                st.totals = t;
                have_state = true;
            } else {
                throw std::runtime_error("checkpoint: unknown record type");
            }
        }
    }
    if (!have_state) throw std::runtime_error("checkpoint: no state record");
    st.checksum = checksum;
    return st;
}

}  // namespace reprcount
