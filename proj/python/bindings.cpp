#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smsvoice/audio.hpp"
#include "smsvoice/channel_sim.hpp"
#include "smsvoice/error.hpp"
#include "smsvoice/metrics.hpp"
#include "smsvoice/payload_codec.hpp"
#include "smsvoice/pipeline.hpp"
#include "smsvoice/reassembly.hpp"
#include "smsvoice/segmentation.hpp"

namespace py = pybind11;
using namespace smsvoice;

namespace {

std::span<const std::uint8_t> as_span(const py::bytes& b, std::string& storage) {
    storage = b;
    return {reinterpret_cast<const std::uint8_t*>(storage.data()), storage.size()};
}

py::bytes to_py(const Bytes& b) { return py::bytes(reinterpret_cast<const char*>(b.data()), b.size()); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Voice over concatenated SMS";

    // Python-side exception with a `kind` attribute naming the error case.
    py::object error_type = py::reinterpret_steal<py::object>(
        PyErr_NewException("smsvoice._core.Error", PyExc_RuntimeError, nullptr));
    m.attr("Error") = error_type;
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object type = py::module_::import("smsvoice._core").attr("Error");
            py::object exc = type(std::string(e.what()));
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(type.ptr(), exc.ptr());
        }
    });

    py::class_<AudioClip>(m, "AudioClip")
        .def(py::init<std::uint32_t, int, std::vector<std::int16_t>>(), py::arg("sample_rate_hz"),
             py::arg("bit_depth"), py::arg("samples"))
        .def_property_readonly("sample_rate_hz", &AudioClip::sample_rate_hz)
        .def_property_readonly("bit_depth", &AudioClip::bit_depth)
        .def_property_readonly("channels", &AudioClip::channels)
        .def_property_readonly("samples",
                               [](const AudioClip& c) {
                                   return std::vector<std::int16_t>(c.samples().begin(), c.samples().end());
                               })
        .def("__len__", &AudioClip::size)
        .def("__eq__", [](const AudioClip& a, const AudioClip& b) { return a == b; });

    py::class_<Codec>(m, "Codec")
        .def_static("pcm", &Codec::pcm)
        .def_static("ulaw", &Codec::ulaw)
        .def_static("toy", &Codec::toy, py::arg("decimation") = kDefaultDecimation)
        .def_static("parse", [](const std::string& s) { return Codec::parse(s); })
        .def_readonly("decimation", &Codec::decimation)
        .def_property_readonly("name", &Codec::name)
        .def("__repr__", [](const Codec& c) { return "Codec('" + c.name() + "')"; });

    py::enum_<CostModel>(m, "CostModel").value("UNIFORM", CostModel::Uniform).value("WIDE", CostModel::Wide);

    py::class_<SegmentationConfig>(m, "SegmentationConfig")
        .def(py::init([](std::size_t capacity, CostModel cost, std::size_t group) {
                 SegmentationConfig cfg{capacity, cost, group};
                 cfg.validate();
                 return cfg;
             }),
             py::arg("capacity") = kDefaultCapacity, py::arg("cost_model") = CostModel::Uniform,
             py::arg("group_size") = kDefaultGroupSize)
        .def_readonly("capacity", &SegmentationConfig::capacity)
        .def_readonly("cost_model", &SegmentationConfig::cost_model)
        .def_readonly("group_size", &SegmentationConfig::group_size);

    py::class_<Segment>(m, "Segment")
        .def(py::init<int, std::u32string>(), py::arg("index"), py::arg("payload"))
        .def_readonly("index", &Segment::index)
        .def_readonly("payload", &Segment::payload)
        .def("__eq__", [](const Segment& a, const Segment& b) { return a == b; })
        .def("__repr__", [](const Segment& s) { return "Segment(" + std::to_string(s.index) + ")"; });

    py::enum_<ReassemblyPolicy>(m, "ReassemblyPolicy")
        .value("STRICT", ReassemblyPolicy::Strict)
        .value("LOOSE", ReassemblyPolicy::Loose);

    py::enum_<Outcome>(m, "Outcome")
        .value("DELIVERED", Outcome::Delivered)
        .value("DROPPED", Outcome::Dropped)
        .value("DUPLICATED", Outcome::Duplicated);

    py::class_<ChannelConfig>(m, "ChannelConfig")
        .def(py::init([](double loss, double dup, std::uint64_t delay, std::uint64_t seed) {
                 ChannelConfig cfg{loss, dup, delay, seed};
                 cfg.validate();
                 return cfg;
             }),
             py::arg("loss") = 0.0, py::arg("dup") = 0.0, py::arg("delay") = 0, py::arg("seed") = 0);

    m.def("read_wav", [](const py::bytes& b) {
        std::string s;
        return read_wav(as_span(b, s));
    });
    m.def("write_wav", [](const AudioClip& c) { return to_py(write_wav(c)); });
    m.def("ulaw_encode_sample", &ulaw_encode_sample);
    m.def("ulaw_decode_sample", &ulaw_decode_sample);
    m.def("codec_encode", [](const AudioClip& c, const Codec& k) { return to_py(codec_encode(c, k)); });
    m.def(
        "codec_decode",
        [](const py::bytes& b, const Codec& k, std::uint32_t rate, int bits) {
            std::string s;
            return codec_decode(as_span(b, s), k, rate, bits);
        },
        py::arg("stream"), py::arg("codec"), py::arg("sample_rate_hz"), py::arg("bit_depth") = 16);

    m.def("bytes_to_codepoints", [](const py::bytes& b) {
        std::string s;
        return bytes_to_codepoints(as_span(b, s));
    });
    m.def("codepoints_to_bytes", [](const std::u32string& p) { return to_py(codepoints_to_bytes(p)); });

    m.def("segment", [](const std::u32string& s, const SegmentationConfig& c) { return segment(s, c); },
          py::arg("stream"), py::arg("config") = SegmentationConfig{});
    m.def("render_segment", &render_segment);
    m.def("parse_segment", [](const std::u32string& s) { return parse_segment(s); });
    m.def("connected_group_count", &connected_group_count, py::arg("message_count"),
          py::arg("group_size") = kDefaultGroupSize);

    m.def("reassemble", [](const std::vector<Segment>& segs, ReassemblyPolicy policy) {
        Reassembled r = reassemble(segs, policy);
        py::dict report;
        report["received_indices"] = r.report.received_indices;
        report["missing_indices"] = r.report.missing_indices;
        report["duplicate_count"] = r.report.duplicate_count;
        report["tail_unknown"] = r.report.tail_unknown;
        return py::make_tuple(r.stream, report);
    });

    m.def("transmit", [](const std::vector<std::u32string>& messages, const ChannelConfig& cfg) {
        auto r = transmit<std::u32string>(messages, cfg);
        return py::make_tuple(r.delivered, r.log.dump());
    });

    m.def("analyze", [](const AudioClip& clip, const Codec& codec, const SegmentationConfig& cfg) {
        TransmissionReport r = analyze(clip, codec, cfg);
        py::dict d;
        d["codec"] = r.codec.name();
        d["chars"] = r.char_count;
        d["messages"] = r.message_count;
        d["connected"] = r.connected_count;
        return d;
    }, py::arg("clip"), py::arg("codec"), py::arg("config") = SegmentationConfig{});
    m.def("compare_csv", [](const AudioClip& clip, const std::vector<Codec>& codecs, const SegmentationConfig& cfg) {
        return compare(clip, codecs, cfg).to_csv();
    }, py::arg("clip"), py::arg("codecs"), py::arg("config") = SegmentationConfig{});

    m.def("encode_clip", &encode_clip, py::arg("clip"), py::arg("codec"),
          py::arg("config") = SegmentationConfig{});
    m.def("decode_segments",
          [](const std::vector<Segment>& segs, const Codec& codec, ReassemblyPolicy policy, std::uint32_t rate,
             int bits) { return decode_segments(segs, codec, policy, rate, bits).clip; },
          py::arg("segments"), py::arg("codec"), py::arg("policy") = ReassemblyPolicy::Loose,
          py::arg("sample_rate_hz") = 8000, py::arg("bit_depth") = 16);
}
