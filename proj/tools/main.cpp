// fibzeck - command-line front end over the Zeckendorf / fibbinary /
// golden-ratio library. Exit codes: 0 success, 1 verification mismatch,
// 2 usage or domain error.

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <iterator>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "fibzeck/fibcore.hpp"
#include "fibzeck/fibstream.hpp"
#include "fibzeck/odfib.hpp"
#include "fibzeck/quadgold.hpp"

namespace {

using fibzeck::BitStream;
using fibzeck::FibWord;
using fibzeck::Nat;
using fibzeck::SeqKind;
using fibzeck::SequenceRecord;
using fibzeck::ZeckRepr;

Nat parse_nat(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("expected a nonnegative decimal integer, got '" +
                                text + "'");
  return Nat(text);
}

std::uint64_t parse_u64(const std::string& text) {
  const Nat n = parse_nat(text);
  if (n > std::numeric_limits<std::uint64_t>::max())
    throw std::invalid_argument("count too large: " + text);
  return static_cast<std::uint64_t>(n);
}

std::vector<std::uint64_t> parse_index_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_u64(item));
  if (out.empty()) throw std::invalid_argument("empty index list");
  return out;
}

std::string join_indices(const std::vector<std::uint64_t>& idx,
                         const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(idx[i]);
  }
  return out;
}

struct Options {
  bool json = false;
  bool binary = false;
};

void print_records(const std::vector<SequenceRecord>& records,
                   const Options& opt, bool word_valued) {
  for (const SequenceRecord& r : records) {
    if (opt.json) {
      std::cout << "{\"rank\": " << r.rank.str() << ", \"value\": \""
                << r.value.str() << "\", \"binary\": \"" << r.binary
                << "\", \"zeckendorf_indices\": ["
                << join_indices(r.zeck_indices, ", ") << "]}\n";
    } else if (opt.binary && word_valued) {
      std::cout << r.binary << "\n";
    } else {
      std::cout << r.value.str() << "\n";
    }
  }
}

void print_word(const FibWord& w, const Options& opt) {
  std::cout << (opt.binary ? fibzeck::to_binary(w.value()) : w.value().str())
            << "\n";
}

// ---- codec plumbing --------------------------------------------------

std::vector<Nat> read_values(std::istream& in) {
  std::vector<Nat> values;
  std::string tok;
  while (in >> tok) values.push_back(parse_nat(tok));
  return values;
}

int run_codec_encode(bool text) {
  const std::vector<Nat> values = read_values(std::cin);
  const BitStream s = fibzeck::encode_stream(values);
  if (text) {
    std::cout << s.to_string() << "\n";
  } else {
    const auto& bytes = s.bytes();
    std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                    static_cast<std::streamsize>(bytes.size()));
  }
  return 0;
}

int run_codec_decode(bool text) {
  BitStream s;
  if (text) {
    std::string bits;
    char c;
    while (std::cin.get(c)) {
      if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
      bits.push_back(c);
    }
    s = BitStream::from_string(bits);
  } else {
    const std::string raw((std::istreambuf_iterator<char>(std::cin)),
                          std::istreambuf_iterator<char>());
    s = BitStream::from_bytes(std::span(
        reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
  }
  for (const Nat& v : fibzeck::decode_stream(s)) std::cout << v.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Zeckendorf, fibbinary and golden-ratio arithmetic"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit list outputs as JSON lines");
  app.add_flag("--binary", opt.binary,
               "print fibbinary-word outputs in base 2");

  // The selected action; parsing only records strings, work happens after.
  std::function<int()> run;

  // -- zeck ------------------------------------------------------------
  auto* zeck = app.add_subcommand("zeck", "Zeckendorf representations");
  zeck->require_subcommand(1);
  {
    static std::string arg_n;
    auto* cmd = zeck->add_subcommand("encode",
                                     "decompose n into Fibonacci indices");
    cmd->add_option("n", arg_n, "positive integer")->required();
    cmd->callback([&] {
      run = [&] {
        const ZeckRepr r = fibzeck::zeck_encode(parse_nat(arg_n));
        std::cout << join_indices(r.indices(), ",") << "\n";
        return 0;
      };
    });
  }
  {
    static std::string arg_idx;
    auto* cmd = zeck->add_subcommand("decode",
                                     "sum Fibonacci numbers by index");
    cmd->add_option("indices", arg_idx,
                    "comma-separated decreasing indices, e.g. 11,6,4")
        ->required();
    cmd->callback([&] {
      run = [&] {
        const ZeckRepr r(parse_index_list(arg_idx));
        std::cout << fibzeck::zeck_decode(r).str() << "\n";
        return 0;
      };
    });
  }

  // -- fib -------------------------------------------------------------
  auto* fib = app.add_subcommand("fib", "the fibbinary bijection");
  fib->require_subcommand(1);
  {
    static std::string arg_n;
    auto* cmd = fib->add_subcommand("map", "n-th fibbinary number");
    cmd->add_option("n", arg_n, "rank >= 1")->required();
    cmd->callback([&] {
      run = [&] {
        print_word(fibzeck::fib_map(parse_nat(arg_n)), opt);
        return 0;
      };
    });
  }
  {
    static std::string arg_w;
    auto* cmd = fib->add_subcommand("unmap", "rank of a fibbinary number");
    cmd->add_option("w", arg_w, "fibbinary number >= 1")->required();
    cmd->callback([&] {
      run = [&] {
        std::cout << fibzeck::fib_unmap(FibWord(parse_nat(arg_w))).str()
                  << "\n";
        return 0;
      };
    });
  }
  {
    static std::string arg_from, arg_count;
    auto* cmd = fib->add_subcommand("seq", "consecutive fibbinary numbers");
    cmd->add_option("from", arg_from, "first rank >= 1")->required();
    cmd->add_option("count", arg_count, "number of rows")->required();
    cmd->callback([&] {
      run = [&] {
        print_records(fibzeck::sequence_emit(SeqKind::fib, parse_nat(arg_from),
                                             parse_u64(arg_count)),
                      opt, /*word_valued=*/true);
        return 0;
      };
    });
  }

  // -- odfib -----------------------------------------------------------
  auto* od = app.add_subcommand("odfib", "odd fibbinary numbers");
  od->require_subcommand(1);
  {
    static std::string arg_n;
    auto* cmd = od->add_subcommand("nth", "n-th odd fibbinary number");
    cmd->add_option("n", arg_n, "rank >= 1")->required();
    cmd->callback([&] {
      run = [&] {
        print_word(fibzeck::odfib(parse_nat(arg_n)), opt);
        return 0;
      };
    });
  }
  {
    static std::string arg_w;
    auto* cmd = od->add_subcommand("rank", "rank of an odd fibbinary number");
    cmd->add_option("w", arg_w, "odd fibbinary number")->required();
    cmd->callback([&] {
      run = [&] {
        std::cout << fibzeck::odfib_inverse(FibWord(parse_nat(arg_w))).str()
                  << "\n";
        return 0;
      };
    });
  }
  {
    static std::string arg_from, arg_count;
    auto* cmd = od->add_subcommand("seq", "consecutive odd fibbinary numbers");
    cmd->add_option("from", arg_from, "first rank >= 1")->required();
    cmd->add_option("count", arg_count, "number of rows")->required();
    cmd->callback([&] {
      run = [&] {
        print_records(fibzeck::sequence_emit(SeqKind::odfib,
                                             parse_nat(arg_from),
                                             parse_u64(arg_count)),
                      opt, /*word_valued=*/true);
        return 0;
      };
    });
  }

  // -- z ---------------------------------------------------------------
  auto* z = app.add_subcommand(
      "z", "rank of the n-th odd fibbinary number among all fibbinary");
  z->require_subcommand(1);
  {
    static std::string arg_n;
    auto* cmd = z->add_subcommand("closed", "floor(n*phi^2) - 1, exactly");
    cmd->add_option("n", arg_n, "rank >= 1")->required();
    cmd->callback([&] {
      run = [&] {
        std::cout << fibzeck::z_closed(parse_nat(arg_n)).str() << "\n";
        return 0;
      };
    });
  }
  {
    static std::string arg_n;
    auto* cmd = z->add_subcommand("recursive", "Z by Fibonacci peeling");
    cmd->add_option("n", arg_n, "rank >= 1")->required();
    cmd->callback([&] {
      run = [&] {
        std::cout << fibzeck::z_recursive(parse_nat(arg_n)).str() << "\n";
        return 0;
      };
    });
  }
  {
    static std::string arg_from, arg_count;
    auto* cmd = z->add_subcommand("seq", "consecutive Z values");
    cmd->add_option("from", arg_from, "first rank >= 1")->required();
    cmd->add_option("count", arg_count, "number of rows")->required();
    cmd->callback([&] {
      run = [&] {
        print_records(fibzeck::sequence_emit(SeqKind::z, parse_nat(arg_from),
                                             parse_u64(arg_count)),
                      opt, /*word_valued=*/false);
        return 0;
      };
    });
  }

  // -- verify ----------------------------------------------------------
  {
    static std::string arg_nmax;
    static unsigned arg_shards = 1;
    auto* cmd = app.add_subcommand(
        "verify", "check Z(n) = floor(n*phi^2) - 1 against a brute-force scan");
    cmd->add_option("n_max", arg_nmax, "highest rank to verify")->required();
    cmd->add_option("--shards", arg_shards, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    cmd->callback([&] {
      run = [&] {
        const fibzeck::VerifyReport report =
            fibzeck::verify_theorem(parse_nat(arg_nmax), arg_shards);
        std::cout << report.describe() << "\n";
        return report.ok ? 0 : 1;
      };
    });
  }

  // -- codec -----------------------------------------------------------
  auto* codec = app.add_subcommand(
      "codec", "self-delimiting Fibonacci-code stream (stdin -> stdout)");
  codec->require_subcommand(1);
  {
    static bool text = false;
    auto* cmd = codec->add_subcommand(
        "encode", "read whitespace-separated integers, write the bit stream");
    cmd->add_flag("--text", text, "emit a '01' string instead of raw bytes");
    cmd->callback([&] {
      run = [&] { return run_codec_encode(text); };
    });
  }
  {
    static bool text = false;
    auto* cmd = codec->add_subcommand(
        "decode", "read a bit stream, write one integer per line");
    cmd->add_flag("--text", text, "read a '01' string instead of raw bytes");
    cmd->callback([&] {
      run = [&] { return run_codec_decode(text); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
