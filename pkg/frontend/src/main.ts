// DOM wiring: renders the board, narrates the phases, and forwards every
// strategic question to the service. One request in flight at a time;
// buttons are disabled while waiting.

import { PuzzleApi } from "./api.js";
import {
  SUPPORTED_K,
  UiState,
  applyFlip,
  applyGuess,
  cellCount,
  chooseCell,
  gridDimensions,
  initialState,
  isSuccess,
  reset,
  togglePebble,
} from "./state.js";

const DEFAULT_BASE_URL = "http://127.0.0.1:8085";

let state: UiState = initialState(6);
let picking = false; // next board click chooses the secret cell
let pending = false; // a request is in flight
let debugOpen = false;
let debugColor: number | null = null;

const el = {
  board: byId("board"),
  status: byId("status"),
  error: byId("error"),
  pickButton: byId("pick") as HTMLButtonElement,
  wise1Button: byId("wise1") as HTMLButtonElement,
  wise2Button: byId("wise2") as HTMLButtonElement,
  resetButton: byId("reset") as HTMLButtonElement,
  sizeSelect: byId("size") as HTMLSelectElement,
  baseUrl: byId("base-url") as HTMLInputElement,
  debugToggle: byId("debug-toggle") as HTMLButtonElement,
  debug: byId("debug"),
};

function byId(id: string): HTMLElement {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing element #${id}`);
  }
  return found;
}

function api(): PuzzleApi {
  return new PuzzleApi(el.baseUrl.value.replace(/\/+$/, "") || DEFAULT_BASE_URL);
}

function setState(next: UiState): void {
  state = next;
  render();
  if (debugOpen) {
    void refreshDebug();
  }
}

function showError(message: string): void {
  el.error.textContent = message;
  el.error.classList.remove("hidden");
  window.setTimeout(() => el.error.classList.add("hidden"), 4000);
}

async function withPending(action: () => Promise<void>): Promise<void> {
  if (pending) {
    return;
  }
  pending = true;
  render();
  try {
    await action();
  } catch (err) {
    showError(err instanceof Error ? err.message : String(err));
  } finally {
    pending = false;
    render();
  }
}

function onCellClick(cell: number): void {
  if (pending) {
    return;
  }
  if (state.phase === "setup" && picking) {
    picking = false;
    setState(chooseCell(state, cell));
  } else if (state.phase === "setup") {
    setState(togglePebble(state, cell));
  }
  // clicks outside setup are guarded by the machine and change nothing
}

function stepWiseOne(): void {
  if (state.phase !== "cell-chosen" || state.chosen === null) {
    return;
  }
  const { k, board, chosen } = state;
  void withPending(async () => {
    const reply = await api().flip(k, board, chosen);
    setState(applyFlip(state, reply.flip, reply.boardAfter));
  });
}

function stepWiseTwo(): void {
  if (state.phase !== "flipped") {
    return;
  }
  const { k, board } = state;
  void withPending(async () => {
    const guess = await api().guess(k, board);
    setState(applyGuess(state, guess));
  });
}

async function refreshDebug(): Promise<void> {
  try {
    debugColor = await api().color(state.k, state.board);
  } catch {
    debugColor = null;
  }
  renderDebug();
}

function render(): void {
  renderBoard();
  renderControls();
  renderStatus();
  renderDebug();
}

function renderBoard(): void {
  const { cols, rows } = gridDimensions(state.k);
  el.board.style.gridTemplateColumns = `repeat(${cols}, 1fr)`;
  el.board.replaceChildren();
  for (let row = 0; row < rows; row++) {
    for (let col = 0; col < cols; col++) {
      const cell = row * cols + col;
      const button = document.createElement("button");
      button.className = "cell";
      if ((row + col) % 2 === 1) {
        button.classList.add("dark");
      }
      if (state.board.includes(cell)) {
        button.classList.add("pebble");
        button.textContent = "●";
      }
      if (state.chosen === cell) {
        button.classList.add("chosen");
      }
      if (state.flip === cell && state.phase !== "setup") {
        button.classList.add("flipped");
      }
      if (state.guess === cell && state.phase === "guessed") {
        button.classList.add("guessed");
      }
      if (debugOpen) {
        const index = document.createElement("span");
        index.className = "index";
        index.textContent = String(cell);
        button.appendChild(index);
      }
      button.addEventListener("click", () => onCellClick(cell));
      el.board.appendChild(button);
    }
  }
}

function renderControls(): void {
  el.pickButton.disabled = pending || state.phase !== "setup";
  el.pickButton.textContent = picking
    ? "click a cell…"
    : "Sultan: pick the secret cell";
  el.wise1Button.disabled = pending || state.phase !== "cell-chosen";
  el.wise2Button.disabled = pending || state.phase !== "flipped";
  el.resetButton.disabled = pending;
  el.sizeSelect.disabled = pending || state.phase !== "setup";
}

function renderStatus(): void {
  const lines: Record<string, string> = {
    setup:
      "Setup: click cells to place pebbles, then let the sultan pick the secret cell.",
    "cell-chosen": `Secret cell ${state.chosen} chosen. Wise man 1 must flip exactly one pebble.`,
    flipped: `Wise man 1 toggled cell ${state.flip}. Wise man 2 sees only the board.`,
    guessed: isSuccess(state)
      ? `Wise man 2 guessed ${state.guess}: correct!`
      : `BUG: guess ${state.guess} does not match chosen ${state.chosen}`,
  };
  el.status.textContent = lines[state.phase];
  el.status.classList.toggle("success", isSuccess(state));
  el.status.classList.toggle("failure", state.phase === "guessed" && !isSuccess(state));
}

function renderDebug(): void {
  el.debug.classList.toggle("hidden", !debugOpen);
  if (debugOpen) {
    const colorText = debugColor === null ? "?" : String(debugColor);
    el.debug.textContent =
      `cells 0..${cellCount(state.k) - 1}, row-major | ` +
      `board ${JSON.stringify([...state.board])} | color ${colorText}`;
  }
}

function init(): void {
  for (const k of SUPPORTED_K) {
    const option = document.createElement("option");
    option.value = String(k);
    option.textContent = `${gridDimensions(k).cols}×${gridDimensions(k).rows} (k=${k})`;
    if (k === state.k) {
      option.selected = true;
    }
    el.sizeSelect.appendChild(option);
  }
  el.baseUrl.value = DEFAULT_BASE_URL;
  el.pickButton.addEventListener("click", () => {
    if (state.phase === "setup") {
      picking = !picking;
      render();
    }
  });
  el.wise1Button.addEventListener("click", stepWiseOne);
  el.wise2Button.addEventListener("click", stepWiseTwo);
  el.resetButton.addEventListener("click", () => {
    picking = false;
    setState(reset(state));
  });
  el.sizeSelect.addEventListener("change", () => {
    picking = false;
    setState(reset(state, Number(el.sizeSelect.value)));
  });
  el.debugToggle.addEventListener("click", () => {
    debugOpen = !debugOpen;
    render();
    if (debugOpen) {
      void refreshDebug();
    }
  });
  render();
}

init();
