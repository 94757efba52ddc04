#!/usr/bin/env python3
"""The sultan's pebble puzzle, played by two scripted wise men.

A sultan secretly picks a chessboard cell and shows it to the first wise
man.  The board's 64 cells each hold a pebble or not.  The first wise man
must toggle exactly one cell; the second then looks only at the board and
names the secret cell.  The strategy is a rainbow coloring of the graph of
board states (toggle one cell = move to a neighbor; the graph is 64-regular
and coloring a board by the XOR of its occupied cells puts every color
exactly once in each neighborhood).
"""

import random

from rainbowlab import Board, board_color, flip_for_target, guess_target

rng = random.Random(8)

# A small board first so the arithmetic is visible: k=2 means 4 cells.
board = Board(2, frozenset({1, 2}))
print("cells:", board.to_wire(), "-> color", board_color(board), "(1 XOR 2)")
secret = 0
flip, after = flip_for_target(board, secret)
print(f"sultan picks {secret}; wise man 1 toggles cell {flip}")
print("board now:", after.to_wire(), "-> wise man 2 guesses", guess_target(after))

# Now ten full games on the real chessboard.
print("\nten games at k=6 (64 cells):")
for game in range(10):
    pebbles = frozenset(c for c in range(64) if rng.random() < 0.5)
    board = Board(6, pebbles)
    secret = rng.randrange(64)
    flip, after = flip_for_target(board, secret)
    guess = guess_target(after)
    verdict = "ok" if guess == secret else "FAILED"
    print(f"  secret {secret:>2}  toggled {flip:>2}  guessed {guess:>2}  {verdict}")

# The reason it always works: from any board, toggling each of the 64 cells
# reaches all 64 colors exactly once.
board = Board(6, frozenset({7, 12, 40}))
reachable = {board_color(board.toggle(i)) for i in range(64)}
print("\ncolors reachable in one toggle:", len(reachable), "of 64")
