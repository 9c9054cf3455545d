"""HTTP JSON service over an immutable, already-loaded model.

Endpoints:
  GET  /health    liveness probe
  GET  /model     corpus and cluster summary
  GET  /clusters  centers with members above 0.5 membership
  POST /ask       {"question": str, "top_k": int?} -> answers or fallback

Every response is JSON, including errors (4xx carry {"error": ...}).
When a static directory is configured, files in it are served from the
same origin so the web client needs no CORS setup.  The model is never
mutated, so the threading server can answer concurrent requests safely.
"""

from __future__ import annotations

import json
import logging
import mimetypes
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .model import InsertModel
from .retrieval import QueryResult

logger = logging.getLogger(__name__)

_MAX_BODY = 1 << 20


def _answers_payload(result: QueryResult) -> dict:
    if result.fallback is not None:
        return {"fallback": result.fallback}
    return {
        "answers": [
            {
                "text": a.text,
                "relevance": a.relative_relevance,
                "doc_index": a.doc_index,
            }
            for a in result.answers
        ]
    }


class _Handler(BaseHTTPRequestHandler):
    server_version = "leafletqa/0.1"

    @property
    def model(self) -> InsertModel:
        return self.server.model

    def log_message(self, fmt, *args):
        logger.debug("%s %s", self.address_string(), fmt % args)

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_static(self, relpath: str) -> None:
        root = Path(self.server.static_dir).resolve()
        target = (root / relpath.lstrip("/")).resolve()
        if not target.is_relative_to(root) or not target.is_file():
            self._send_json(404, {"error": "not found"})
            return
        content_type = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        body = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_GET(self):
        path = self.path.split("?", 1)[0]
        if path == "/health":
            self._send_json(200, {"status": "ok"})
        elif path == "/model":
            s = self.model.stats
            self._send_json(
                200,
                {
                    "documents": s.documents,
                    "tokens": s.tokens,
                    "relevant_terms": s.relevant_terms,
                    "relevant_fraction": s.relevant_fraction,
                    "clusters": s.clusters,
                },
            )
        elif path == "/clusters":
            self._send_json(200, self.model.cluster_report())
        elif self.server.static_dir is not None:
            self._send_static("index.html" if path == "/" else path)
        else:
            self._send_json(404, {"error": "not found"})

    def do_POST(self):
        path = self.path.split("?", 1)[0]
        if path != "/ask":
            self._send_json(404, {"error": "not found"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
        except ValueError:
            self._send_json(400, {"error": "bad Content-Length"})
            return
        if length <= 0 or length > _MAX_BODY:
            self._send_json(400, {"error": "missing or oversized request body"})
            return
        raw = self.rfile.read(length)
        try:
            payload = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            self._send_json(400, {"error": "request body is not valid JSON"})
            return
        if not isinstance(payload, dict):
            self._send_json(400, {"error": "request body must be a JSON object"})
            return
        question = payload.get("question")
        if not isinstance(question, str) or not question.strip():
            self._send_json(400, {"error": "'question' must be a non-empty string"})
            return
        top_k = payload.get("top_k")
        if top_k is not None and (isinstance(top_k, bool) or not isinstance(top_k, int) or top_k < 1):
            self._send_json(400, {"error": "'top_k' must be a positive integer"})
            return
        result = self.model.answer(question, top_k=top_k)
        self._send_json(200, _answers_payload(result))


def make_server(
    model: InsertModel, port: int, static_dir: str | None = None
) -> ThreadingHTTPServer:
    """Create (but do not start) the HTTP server; port 0 picks a free port."""
    server = ThreadingHTTPServer(("127.0.0.1", port), _Handler)
    server.model = model
    server.static_dir = static_dir
    return server


def serve_forever(model: InsertModel, port: int, static_dir: str | None = None) -> None:
    """Run the service until interrupted; shuts the socket down cleanly."""
    server = make_server(model, port, static_dir=static_dir)
    host, bound_port = server.server_address[:2]
    print(f"serving on http://{host}:{bound_port} (Ctrl+C to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        print("\nshutting down")
    finally:
        server.server_close()
