"""Run the HTTP service in-process and talk to it like a client would.

Run:  python demos/05_http_service.py
"""

import json
import threading
import urllib.request
from importlib import resources

from leafletqa import build_model
from leafletqa.server import make_server

text = (
    resources.files("leafletqa.data")
    .joinpath("sample_insert.txt")
    .read_text(encoding="utf-8")
)
model = build_model(text)

server = make_server(model, port=0)
thread = threading.Thread(target=server.serve_forever, daemon=True)
thread.start()
host, port = server.server_address[:2]
base = f"http://{host}:{port}"
print(f"service listening on {base}")


def get(path):
    with urllib.request.urlopen(f"{base}{path}", timeout=5) as resp:
        return json.load(resp)


def post(path, payload):
    req = urllib.request.Request(
        f"{base}{path}",
        data=json.dumps(payload).encode(),
        headers={"Content-Type": "application/json"},
    )
    with urllib.request.urlopen(req, timeout=5) as resp:
        return json.load(resp)


print("\nGET /health ->", get("/health"))
print("GET /model  ->", get("/model"))

clusters = get("/clusters")
print(f"GET /clusters -> {len(clusters)} clusters, centers:",
      [c["center_stem"] for c in clusters])

answer = post("/ask", {"question": "risks of bleeding?", "top_k": 1})
print("\nPOST /ask {'question': 'risks of bleeding?'} ->")
print(json.dumps(answer, indent=2)[:400])

fallback = post("/ask", {"question": "xyzzy"})
print("\nPOST /ask with unknown words ->", fallback)

server.shutdown()
server.server_close()
print("\nserver stopped")
