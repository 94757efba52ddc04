// Pure state machine for the pebble game UI.
//
// Phases only move forward: setup -> cell-chosen -> flipped -> guessed, then
// reset back to setup. The machine never computes a flip or a guess itself;
// those arrive from the service and are merely recorded here.

export type Phase = "setup" | "cell-chosen" | "flipped" | "guessed";

export interface UiState {
  readonly k: number;
  readonly board: readonly number[]; // sorted occupied cells
  readonly phase: Phase;
  readonly chosen: number | null; // the sultan's secret cell
  readonly flip: number | null; // wise man 1's toggled cell
  readonly guess: number | null; // wise man 2's answer
}

export const SUPPORTED_K = [2, 4, 6] as const;

export function cellCount(k: number): number {
  return 1 << k;
}

/** Grid shape: 2^ceil(k/2) columns by 2^floor(k/2) rows (8x8 at k = 6). */
export function gridDimensions(k: number): { cols: number; rows: number } {
  return { cols: 1 << Math.ceil(k / 2), rows: 1 << Math.floor(k / 2) };
}

export function initialState(k: number, board: readonly number[] = []): UiState {
  if (!SUPPORTED_K.includes(k as (typeof SUPPORTED_K)[number])) {
    throw new Error(`unsupported board size k=${k}`);
  }
  return {
    k,
    board: normalize(k, board),
    phase: "setup",
    chosen: null,
    flip: null,
    guess: null,
  };
}

function normalize(k: number, cells: readonly number[]): number[] {
  const unique = [...new Set(cells)].sort((a, b) => a - b);
  for (const cell of unique) {
    if (cell < 0 || cell >= cellCount(k)) {
      throw new Error(`cell ${cell} outside the ${cellCount(k)}-cell board`);
    }
  }
  return unique;
}

/** Setup only: add or remove a pebble. Ignored in any other phase. */
export function togglePebble(state: UiState, cell: number): UiState {
  if (state.phase !== "setup" || cell < 0 || cell >= cellCount(state.k)) {
    return state;
  }
  const board = state.board.includes(cell)
    ? state.board.filter((c) => c !== cell)
    : [...state.board, cell].sort((a, b) => a - b);
  return { ...state, board };
}

/** The sultan commits to a secret cell; moves setup -> cell-chosen. */
export function chooseCell(state: UiState, cell: number): UiState {
  if (state.phase !== "setup" || cell < 0 || cell >= cellCount(state.k)) {
    return state;
  }
  return { ...state, chosen: cell, phase: "cell-chosen" };
}

/** Record the service's flip answer; moves cell-chosen -> flipped. */
export function applyFlip(
  state: UiState,
  flip: number,
  boardAfter: readonly number[],
): UiState {
  if (state.phase !== "cell-chosen") {
    return state;
  }
  return { ...state, flip, board: normalize(state.k, boardAfter), phase: "flipped" };
}

/** Record the service's guess; moves flipped -> guessed. */
export function applyGuess(state: UiState, guess: number): UiState {
  if (state.phase !== "flipped") {
    return state;
  }
  return { ...state, guess, phase: "guessed" };
}

/** Back to an empty-handed setup, optionally with a different board size. */
export function reset(state: UiState, k?: number): UiState {
  return initialState(k ?? state.k);
}

/** In the guessed phase this must always be true; rendering a failure is a bug alert. */
export function isSuccess(state: UiState): boolean {
  return state.phase === "guessed" && state.guess !== null && state.guess === state.chosen;
}
