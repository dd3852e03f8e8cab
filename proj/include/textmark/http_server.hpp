#pragma once

#include <memory>
#include <string>

#include "textmark/registry.hpp"
#include "textmark/watermark.hpp"

namespace httplib {
class Server;
}

namespace textmark {

// HTTP facade over the certifying authority.
//
//   POST /records  {author, text, keyword?}            -> 201 record JSON
//   POST /verify   {text, record_id} |
//                  {text, keyword, watermark} [, mode]  -> 200 verdict JSON
//   GET  /records?author=&keyword=&digest=              -> 200 record array
//   GET  /health                                        -> 200
//
// The server regenerates watermarks itself on /records instead of trusting
// client-supplied ones, and never writes outside Registry::register_document.
class CaServer {
 public:
  explicit CaServer(Registry& registry,
                    CompareMode default_mode = CompareMode::kPositionalSymbol);
  ~CaServer();

  CaServer(const CaServer&) = delete;
  CaServer& operator=(const CaServer&) = delete;

  // Blocks until stop(). False when the address cannot be bound.
  bool listen(const std::string& host, int port);

  // Split form for tests: bind an OS-assigned port, then serve on a thread.
  int bind_any_port(const std::string& host);
  bool serve_after_bind();
  bool is_running() const;
  void stop();

 private:
  void install_routes();

  Registry& registry_;
  CompareMode default_mode_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace textmark
