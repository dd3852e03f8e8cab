#include "textmark/http_server.hpp"

#include <httplib.h>

#include <json.hpp>

#include "textmark/errors.hpp"
#include "textmark/serialization.hpp"

namespace textmark {
namespace {

using nlohmann::json;

void reply_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void reply_error(httplib::Response& res, int status, const std::string& message,
                 const char* code = nullptr) {
  json body{{"error", message}};
  if (code) body["code"] = code;
  reply_json(res, status, body);
}

// 422 for requests that are well-formed but semantically unusable.
int status_for(const Error& e) {
  switch (e.code()) {
    case Errc::no_words:
    case Errc::explicit_keyword_absent:
    case Errc::below_min_count:
    case Errc::keyword_absent:
    case Errc::keyword_mismatch:
    case Errc::empty_original:
      return 422;
    case Errc::bad_input:
      return 400;
    default:
      return 500;
  }
}

json parse_body(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::exception& e) {
    raise(Errc::bad_input, std::string("request body is not valid JSON: ") + e.what());
  }
}

std::string require_string_field(const json& body, const char* key) {
  if (!body.contains(key) || !body[key].is_string()) {
    raise(Errc::bad_input, std::string("request needs a string field '") + key + "'");
  }
  return body[key].get<std::string>();
}

}  // namespace

CaServer::CaServer(Registry& registry, CompareMode default_mode)
    : registry_(registry), default_mode_(default_mode),
      server_(std::make_unique<httplib::Server>()) {
  install_routes();
}

CaServer::~CaServer() {
  if (server_ && server_->is_running()) server_->stop();
}

void CaServer::install_routes() {
  server_->Get("/health", [](const httplib::Request&, httplib::Response& res) {
    reply_json(res, 200, json{{"status", "ok"}});
  });

  server_->Post("/records", [this](const httplib::Request& req, httplib::Response& res) {
    try {
      const json body = parse_body(req);
      if (!body.is_object()) raise(Errc::bad_input, "request body must be a JSON object");
      const std::string author = require_string_field(body, "author");
      const std::string text = require_string_field(body, "text");
      KeywordPolicy policy;
      if (body.contains("keyword")) {
        if (!body["keyword"].is_string()) raise(Errc::bad_input, "'keyword' must be a string");
        policy = KeywordPolicy::explicit_word(normalize(body["keyword"].get<std::string>()));
      }
      const WatermarkRecord record = registry_.register_document(text, author, policy);
      reply_json(res, 201, to_json(record));
    } catch (const Error& e) {
      reply_error(res, status_for(e), e.what(), errc_name(e.code()));
    } catch (const std::exception& e) {
      reply_error(res, 500, e.what());
    }
  });

  server_->Post("/verify", [this](const httplib::Request& req, httplib::Response& res) {
    try {
      const json body = parse_body(req);
      if (!body.is_object()) raise(Errc::bad_input, "request body must be a JSON object");
      const std::string text = require_string_field(body, "text");

      CompareMode mode = default_mode_;
      if (body.contains("mode")) {
        if (!body["mode"].is_string()) raise(Errc::bad_input, "'mode' must be a string");
        mode = compare_mode_from_name(body["mode"].get<std::string>());
      }

      Watermark original;
      if (body.contains("record_id")) {
        const std::string id = require_string_field(body, "record_id");
        const auto record = registry_.find_by_id(id);
        if (!record) {
          reply_error(res, 404, "no record with id " + id);
          return;
        }
        original = record->watermark;
      } else if (body.contains("watermark")) {
        original = watermark_from_json(body["watermark"]);
        if (body.contains("keyword")) {
          if (!body["keyword"].is_string()) raise(Errc::bad_input, "'keyword' must be a string");
          if (normalize(body["keyword"].get<std::string>()) != original.keyword) {
            raise(Errc::keyword_mismatch, "'keyword' does not match the supplied watermark");
          }
        }
      } else {
        raise(Errc::bad_input, "request needs either 'record_id' or 'watermark'");
      }

      const VerificationResult verdict = extract_and_verify(text, original, mode);
      reply_json(res, 200, verdict_json(verdict));
    } catch (const Error& e) {
      reply_error(res, status_for(e), e.what(), errc_name(e.code()));
    } catch (const std::exception& e) {
      reply_error(res, 500, e.what());
    }
  });

  server_->Get("/records", [this](const httplib::Request& req, httplib::Response& res) {
    RecordQuery query;
    if (req.has_param("author")) query.author = req.get_param_value("author");
    if (req.has_param("keyword")) query.keyword = req.get_param_value("keyword");
    if (req.has_param("digest")) query.text_digest = req.get_param_value("digest");
    json body = json::array();
    for (const WatermarkRecord& record : registry_.find(query)) {
      body.push_back(to_json(record));
    }
    reply_json(res, 200, body);
  });
}

bool CaServer::listen(const std::string& host, int port) { return server_->listen(host, port); }

int CaServer::bind_any_port(const std::string& host) { return server_->bind_to_any_port(host); }

bool CaServer::serve_after_bind() { return server_->listen_after_bind(); }

bool CaServer::is_running() const { return server_->is_running(); }

void CaServer::stop() { server_->stop(); }

}  // namespace textmark
