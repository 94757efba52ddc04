"""The pebble-chessboard guessing game as a stateless JSON service.

A board of 2^k cells holds pebbles.  One player is shown a secret target
cell and must toggle exactly one cell; the other player then looks at the
board alone and names the target.  The winning strategy colors each board
position by the XOR of its occupied cell indices: toggling cell i moves the
color from c to c XOR i, so from any position every color is exactly one
toggle away -- the configuration graph of boards is 2^k-regular and this
coloring is rainbow on it.  First player toggles color XOR target; second
player answers the color they see.

Served over HTTP (``rainbowlab puzzle-serve``): POST /api/color, /api/flip,
/api/guess and GET /api/health, JSON in and out, CORS open for the browser
UI.  Every request carries the full board; there is no server state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

__all__ = [
    "Board",
    "board_color",
    "flip_for_target",
    "guess_target",
    "make_server",
    "serve",
    "MIN_K",
    "MAX_K",
]

MIN_K = 1
MAX_K = 6  # 64 cells: the chessboard


@dataclass(frozen=True)
class Board:
    """A pebble configuration on 2^k cells."""

    k: int
    occupied: frozenset[int]

    def __post_init__(self) -> None:
        if not (MIN_K <= self.k <= MAX_K):
            raise ValueError(f"k must be in {MIN_K}..{MAX_K}")
        cells = 1 << self.k
        for cell in self.occupied:
            if not (0 <= cell < cells):
                raise ValueError(f"cell {cell} outside 0..{cells - 1}")

    @property
    def cells(self) -> int:
        return 1 << self.k

    def toggle(self, cell: int) -> "Board":
        if not (0 <= cell < self.cells):
            raise ValueError(f"cell {cell} outside 0..{self.cells - 1}")
        return Board(self.k, self.occupied ^ {cell})

    def to_wire(self) -> list[int]:
        return sorted(self.occupied)

    @classmethod
    def from_wire(cls, k: int, cells) -> "Board":
        listed = list(cells)
        if len(set(listed)) != len(listed):
            raise ValueError("duplicate cells in board")
        return cls(k, frozenset(listed))


def board_color(board: Board) -> int:
    """XOR of the occupied cell indices; 0 for the empty board."""
    return reduce(lambda a, b: a ^ b, board.occupied, 0)


def flip_for_target(board: Board, target: int) -> tuple[int, Board]:
    """The single toggle that makes the board's color equal ``target``.

    Returns the toggled cell and the new board.
    """
    if not (0 <= target < board.cells):
        raise ValueError(f"target {target} outside 0..{board.cells - 1}")
    flip = board_color(board) ^ target
    return flip, board.toggle(flip)


def guess_target(board: Board) -> int:
    """The second player's answer: just the board's color."""
    return board_color(board)


# -- HTTP layer ---------------------------------------------------------------


class _PuzzleHandler(BaseHTTPRequestHandler):
    def log_message(self, fmt, *args):  # keep test output quiet
        pass

    def _reply(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self) -> None:
        if self.path == "/api/health":
            self._reply(200, {"ok": True})
        else:
            self._reply(404, {"error": f"unknown path {self.path}"})

    def do_POST(self) -> None:
        try:
            length = int(self.headers.get("Content-Length") or 0)
            payload = json.loads(self.rfile.read(length) or b"{}")
        except (ValueError, json.JSONDecodeError):
            self._reply(400, {"error": "request body is not valid JSON"})
            return
        try:
            if self.path == "/api/color":
                board = self._board(payload)
                self._reply(200, {"color": board_color(board)})
            elif self.path == "/api/flip":
                board = self._board(payload)
                target = self._cell(payload, "target", board)
                flip, after = flip_for_target(board, target)
                self._reply(200, {"flip": flip, "board_after": after.to_wire()})
            elif self.path == "/api/guess":
                board = self._board(payload)
                self._reply(200, {"guess": guess_target(board)})
            else:
                self._reply(404, {"error": f"unknown path {self.path}"})
        except (KeyError, TypeError, ValueError) as exc:
            self._reply(400, {"error": str(exc)})

    @staticmethod
    def _board(payload: dict) -> Board:
        if "k" not in payload:
            raise ValueError("missing field 'k'")
        k = payload["k"]
        if not isinstance(k, int) or isinstance(k, bool):
            raise ValueError("'k' must be an integer")
        cells = payload.get("board", [])
        if not isinstance(cells, list) or any(
            not isinstance(c, int) or isinstance(c, bool) for c in cells
        ):
            raise ValueError("'board' must be a list of cell indices")
        return Board.from_wire(k, cells)

    @staticmethod
    def _cell(payload: dict, name: str, board: Board) -> int:
        if name not in payload:
            raise ValueError(f"missing field '{name}'")
        value = payload[name]
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"'{name}' must be an integer")
        if not (0 <= value < board.cells):
            raise ValueError(f"'{name}' outside 0..{board.cells - 1}")
        return value


def make_server(port: int = 0, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    """Bind the service; port 0 picks a free one.  Caller runs/joins it."""
    return ThreadingHTTPServer((host, port), _PuzzleHandler)


def serve(port: int, host: str = "127.0.0.1") -> None:
    """Serve until interrupted."""
    server = make_server(port, host)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
