// Python bindings. Arbitrary-precision values cross the boundary as native
// Python ints via decimal strings, so no magnitude is ever truncated.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "fibzeck/fibcore.hpp"
#include "fibzeck/fibstream.hpp"
#include "fibzeck/odfib.hpp"
#include "fibzeck/quadgold.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// fibzeck::Int (boost cpp_int) <-> python int, exact in both directions.
template <>
struct type_caster<fibzeck::Int> {
  PYBIND11_TYPE_CASTER(fibzeck::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* str = PyObject_Str(src.ptr());
    if (!str) {
      PyErr_Clear();
      return false;
    }
    value = fibzeck::Int(py::cast<std::string>(py::reinterpret_steal<py::object>(str)));
    return true;
  }

  static handle cast(const fibzeck::Int& v, return_value_policy, handle) {
    return handle(PyLong_FromString(v.str().c_str(), nullptr, 10));
  }
};

}  // namespace pybind11::detail

namespace {

using fibzeck::FibWord;
using fibzeck::Nat;
using fibzeck::SeqKind;

SeqKind parse_kind(const std::string& kind) {
  if (kind == "zeck") return SeqKind::zeck;
  if (kind == "fib") return SeqKind::fib;
  if (kind == "odfib") return SeqKind::odfib;
  if (kind == "z") return SeqKind::z;
  throw std::invalid_argument("kind must be one of: zeck, fib, odfib, z");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Zeckendorf / fibbinary / golden-ratio arithmetic";

  py::register_exception<fibzeck::DecodeError>(m, "DecodeError");

  // ---- fibcore -------------------------------------------------------
  m.def("fibonacci", &fibzeck::fibonacci, py::arg("n"),
        "F(n) with F(0) = 0, F(1) = 1");
  m.def(
      "zeck_encode",
      [](const Nat& n) { return fibzeck::zeck_encode(n).indices(); },
      py::arg("n"),
      "Zeckendorf indices of n >= 1, decreasing, pairwise gaps >= 2");
  m.def(
      "zeck_decode",
      [](std::vector<std::uint64_t> indices) {
        return fibzeck::zeck_decode(fibzeck::ZeckRepr(std::move(indices)));
      },
      py::arg("indices"), "sum of F(i) over a valid index list");
  m.def(
      "fib_map", [](const Nat& n) { return fibzeck::fib_map(n).value(); },
      py::arg("n"), "the n-th fibbinary number, n >= 1");
  m.def(
      "fib_unmap", [](const Nat& w) { return fibzeck::fib_unmap(FibWord(w)); },
      py::arg("w"), "rank of a fibbinary number w >= 1");
  m.def("is_fibbinary", &fibzeck::is_fibbinary, py::arg("w"),
        "True iff w >= 0 has no two adjacent set bits");

  py::class_<fibzeck::FibbinaryStream>(m, "FibbinaryStream",
                                       "fibbinary numbers in rank order")
      .def(py::init<const Nat&>(), py::arg("start_rank"))
      .def_property_readonly("rank",
                             [](const fibzeck::FibbinaryStream& s) {
                               return s.rank();
                             })
      .def("__iter__", [](py::object self) { return self; })
      .def("__next__",
           [](fibzeck::FibbinaryStream& s) { return s.next().value(); });

  // ---- quadgold ------------------------------------------------------
  py::class_<fibzeck::GoldenNum>(m, "GoldenNum",
                                 "a + b*tau with tau = (sqrt(5) - 1)/2")
      .def(py::init<fibzeck::Int, fibzeck::Int>(), py::arg("a"), py::arg("b"))
      .def_readonly("a", &fibzeck::GoldenNum::a)
      .def_readonly("b", &fibzeck::GoldenNum::b)
      .def_static("tau", &fibzeck::GoldenNum::tau)
      .def_static("phi", &fibzeck::GoldenNum::phi)
      .def_static("phi_sq", &fibzeck::GoldenNum::phi_sq)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("sign", [](const fibzeck::GoldenNum& x) { return fibzeck::sign(x); })
      .def("floor",
           [](const fibzeck::GoldenNum& x) { return fibzeck::floor(x); })
      .def("frac", [](const fibzeck::GoldenNum& x) { return fibzeck::frac(x); })
      .def("__repr__",
           [](const fibzeck::GoldenNum& x) { return fibzeck::to_string(x); });

  m.def("isqrt", &fibzeck::isqrt, py::arg("n"),
        "largest s with s*s <= n, exact at any size");
  m.def("tau_pow", &fibzeck::tau_pow, py::arg("n"), "tau**n, exactly");
  m.def("floor_n_phi", &fibzeck::floor_n_phi, py::arg("n"),
        "floor(n * phi), exactly");
  m.def("floor_n_phi_sq", &fibzeck::floor_n_phi_sq, py::arg("n"),
        "floor(n * phi**2), exactly");

  // ---- odfib ---------------------------------------------------------
  m.def(
      "odfib", [](const Nat& n) { return fibzeck::odfib(n).value(); },
      py::arg("n"), "the n-th odd fibbinary number, n >= 1");
  m.def(
      "odfib_inverse",
      [](const Nat& w) { return fibzeck::odfib_inverse(FibWord(w)); },
      py::arg("w"), "rank n with odfib(n) == w; w must be odd fibbinary");
  m.def("z_recursive", &fibzeck::z_recursive, py::arg("n"),
        "Z(n) by Fibonacci peeling");
  m.def("z_closed", &fibzeck::z_closed, py::arg("n"),
        "Z(n) = floor(n * phi**2) - 1, exactly");

  py::class_<fibzeck::VerifyMismatch>(m, "VerifyMismatch")
      .def_readonly("rank", &fibzeck::VerifyMismatch::rank)
      .def_readonly("scan_word", &fibzeck::VerifyMismatch::scan_word)
      .def_readonly("odfib_word", &fibzeck::VerifyMismatch::odfib_word)
      .def_readonly("scan_fib_rank", &fibzeck::VerifyMismatch::scan_fib_rank)
      .def_readonly("z_rec", &fibzeck::VerifyMismatch::z_rec)
      .def_readonly("z_cls", &fibzeck::VerifyMismatch::z_cls);

  py::class_<fibzeck::VerifyReport>(m, "VerifyReport")
      .def_readonly("ok", &fibzeck::VerifyReport::ok)
      .def_readonly("ranks_verified", &fibzeck::VerifyReport::ranks_verified)
      .def_readonly("mismatch", &fibzeck::VerifyReport::mismatch)
      .def("describe", &fibzeck::VerifyReport::describe)
      .def("__repr__", &fibzeck::VerifyReport::describe);

  m.def("verify_theorem", &fibzeck::verify_theorem, py::arg("n_max"),
        py::arg("shards") = 1,
        "brute-force check of Z(n) = floor(n*phi^2) - 1 for ranks 1..n_max",
        py::call_guard<py::gil_scoped_release>());

  py::class_<fibzeck::SequenceRecord>(m, "SequenceRecord")
      .def_readonly("rank", &fibzeck::SequenceRecord::rank)
      .def_readonly("value", &fibzeck::SequenceRecord::value)
      .def_readonly("binary", &fibzeck::SequenceRecord::binary)
      .def_readonly("zeck_indices", &fibzeck::SequenceRecord::zeck_indices)
      .def_readonly("odfib_rank", &fibzeck::SequenceRecord::odfib_rank);

  m.def(
      "sequence_emit",
      [](const std::string& kind, const Nat& from, std::uint64_t count) {
        return fibzeck::sequence_emit(parse_kind(kind), from, count);
      },
      py::arg("kind"), py::arg("from_rank"), py::arg("count"),
      "records of the zeck / fib / odfib / z sequence starting at a rank");

  // ---- fibstream -----------------------------------------------------
  m.def("encode_int", &fibzeck::encode_int, py::arg("n"),
        "self-delimiting codeword of n >= 1 as a '01' string");
  m.def(
      "encode_stream",
      [](const std::vector<Nat>& values) {
        const fibzeck::BitStream s = fibzeck::encode_stream(values);
        return py::bytes(reinterpret_cast<const char*>(s.bytes().data()),
                         s.bytes().size());
      },
      py::arg("values"), "concatenated codewords, packed MSB-first");
  m.def(
      "decode_stream",
      [](const py::bytes& data) {
        const std::string raw = data;
        return fibzeck::decode_stream(fibzeck::BitStream::from_bytes(
            {reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()}));
      },
      py::arg("data"), "values of a byte-packed codeword stream");
  m.def(
      "encode_bits",
      [](const std::vector<Nat>& values) {
        return fibzeck::encode_stream(values).to_string();
      },
      py::arg("values"), "concatenated codewords as a '01' string");
  m.def(
      "decode_bits",
      [](const std::string& bits) {
        return fibzeck::decode_stream(fibzeck::BitStream::from_string(bits));
      },
      py::arg("bits"), "values of a '01'-string codeword stream");

  m.attr("__version__") = "0.1.0";
}
