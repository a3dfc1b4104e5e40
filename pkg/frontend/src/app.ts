/**
 * Weight-exploration front end.
 *
 * Load one of the bundled case studies (or upload a mean/std CSV pair), drag
 * the mean-vs-std weight slider and watch the ranking bars reorder live; the
 * sweep view shows the whole weight grid with the stable region highlighted.
 *
 * Every input edit bumps the state revision and marks the chart stale; rank
 * requests are debounced (150 ms) and only a response matching the current
 * revision is displayed, so stale responses are never shown.
 */

import { ApiClient, ApiError, SupersededError, type RankRequest } from "./api.js";
import { chartOrder, renderBarChart } from "./chart.js";
import { pairError, parseMatrixCsv, serializeMatrixCsv } from "./csv.js";
import { badgeCells, hasCellErrors, renderMatrixEditor } from "./grid.js";
import { PRESETS } from "./presets.js";
import { renderSweepTable } from "./sweep.js";
import {
  adoptRank,
  adoptSweep,
  bumpRevision,
  debounce,
  emptyState,
  type SessionState,
} from "./state.js";

export const DEBOUNCE_MS = 150;
const SWEEP_GRID = [0.5, 0.6, 0.7, 0.8, 0.9, 1.0];

export class App {
  readonly state: SessionState = emptyState();
  private requestRank: () => void;

  constructor(
    readonly root: HTMLElement,
    readonly client: ApiClient,
    debounceMs: number = DEBOUNCE_MS,
  ) {
    this.buildSkeleton();
    this.requestRank = debounce(() => void this.rankNow(), debounceMs);
    this.wireControls();
  }

  // --- DOM -------------------------------------------------------------

  private buildSkeleton(): void {
    this.root.innerHTML = `
      <header>
        <h1>Algorithm ranking explorer</h1>
        <div id="banner" class="banner hidden"></div>
      </header>
      <section id="inputs">
        <div id="presets">
          ${Object.entries(PRESETS)
            .map(([key, p]) => `<button class="preset" data-preset="${key}">${p.label}</button>`)
            .join("")}
          <label>means CSV <input type="file" id="mu-file"></label>
          <label>std-devs CSV <input type="file" id="sigma-file"></label>
          <button id="export-csv">export CSV pair</button>
        </div>
        <div id="mu-grid"></div>
        <div id="sigma-grid"></div>
      </section>
      <section id="controls">
        <label>mean weight w_mu
          <input type="range" id="w-mu" min="0" max="1" step="0.01" value="0.7">
          <span id="w-mu-value">0.70</span>
        </label>
        <label>direction
          <select id="direction">
            <option value="benefit">benefit (higher is better)</option>
            <option value="cost">cost (lower is better)</option>
          </select>
        </label>
        <label>method
          <select id="method">
            <option value="atopsis">two-stage</option>
            <option value="hellinger">hellinger baseline</option>
          </select>
        </label>
        <button id="run-sweep">sweep weights</button>
      </section>
      <section id="results">
        <div id="chart" class="stale"></div>
        <div id="sweep"></div>
      </section>
    `;
  }

  private el<T extends HTMLElement>(selector: string): T {
    const node = this.root.querySelector<T>(selector);
    if (!node) throw new Error(`missing element ${selector}`);
    return node;
  }

  // --- wiring ------------------------------------------------------------

  private wireControls(): void {
    for (const button of Array.from(this.root.querySelectorAll<HTMLElement>(".preset"))) {
      button.addEventListener("click", () => this.loadPreset(button.dataset.preset ?? ""));
    }
    const slider = this.el<HTMLInputElement>("#w-mu");
    slider.addEventListener("input", () => {
      this.state.wMu = Number(slider.value);
      this.el("#w-mu-value").textContent = this.state.wMu.toFixed(2);
      this.inputsChanged();
    });
    this.el<HTMLSelectElement>("#direction").addEventListener("change", (ev) => {
      this.state.direction = (ev.target as HTMLSelectElement).value as "benefit" | "cost";
      this.inputsChanged();
    });
    this.el<HTMLSelectElement>("#method").addEventListener("change", (ev) => {
      this.state.method = (ev.target as HTMLSelectElement).value as "atopsis" | "hellinger";
      this.inputsChanged();
    });
    this.el("#run-sweep").addEventListener("click", () => void this.sweepNow());
    this.el("#export-csv").addEventListener("click", () => this.exportCsv());
  }

  /** Any edit: chart is stale until a response for this revision arrives. */
  private inputsChanged(): void {
    bumpRevision(this.state);
    this.el("#chart").classList.add("stale");
    if (this.hasData()) this.requestRank();
  }

  private hasData(): boolean {
    return this.state.algorithms.length > 0 && this.state.benchmarks.length > 0;
  }

  // --- data entry ----------------------------------------------------------

  loadPreset(key: string): void {
    const preset = PRESETS[key];
    if (!preset) return;
    this.state.direction = preset.direction;
    this.el<HTMLSelectElement>("#direction").value = preset.direction;
    this.importCsvPair(preset.muCsv, preset.sigmaCsv);
  }

  /** Parse and adopt a mean/std CSV pair; badge bad cells, banner on mismatch. */
  importCsvPair(muText: string, sigmaText: string): boolean {
    const mu = parseMatrixCsv(muText);
    const sigma = parseMatrixCsv(sigmaText);
    const problem = pairError(mu, sigma);
    if (problem && (mu.error || sigma.error)) {
      this.showBanner(problem);
      return false;
    }
    this.state.algorithms = mu.rowLabels;
    this.state.benchmarks = mu.colLabels;
    this.state.mu = mu.values;
    this.state.muText = mu.cellText.map((row) => [...row]);
    // align sigma rows/cols to the mean file's order
    const rowIndex = new Map(sigma.rowLabels.map((n, i) => [n, i]));
    const colIndex = new Map(sigma.colLabels.map((n, i) => [n, i]));
    const sigmaCell = <T>(grid: T[][], rn: string, cn: string, fallback: T): T => {
      const r = rowIndex.get(rn);
      const c = colIndex.get(cn);
      return r === undefined || c === undefined ? fallback : grid[r][c];
    };
    this.state.sigma = mu.rowLabels.map((rn) =>
      mu.colLabels.map((cn) => sigmaCell(sigma.values, rn, cn, NaN)),
    );
    this.state.sigmaText = mu.rowLabels.map((rn) =>
      mu.colLabels.map((cn) => sigmaCell(sigma.cellText, rn, cn, "")),
    );
    this.renderGrids();
    badgeCells(this.el("#mu-grid"), mu.cellErrors);
    badgeCells(this.el("#sigma-grid"), sigma.cellErrors);
    if (problem) {
      this.showBanner(problem);
      return false;
    }
    this.hideBanner();
    this.inputsChanged();
    return true;
  }

  private renderGrids(): void {
    renderMatrixEditor(
      this.el("#mu-grid"), "means", this.state.algorithms, this.state.benchmarks,
      this.state.mu,
      { onCellChange: (r, c, v) => this.cellEdited("mu", r, c, v) },
    );
    renderMatrixEditor(
      this.el("#sigma-grid"), "standard deviations", this.state.algorithms,
      this.state.benchmarks, this.state.sigma,
      { onCellChange: (r, c, v) => this.cellEdited("sigma", r, c, v) },
    );
  }

  private cellEdited(which: "mu" | "sigma", row: number, col: number, value: number | null): void {
    const grid = which === "mu" ? this.state.mu : this.state.sigma;
    const textGrid = which === "mu" ? this.state.muText : this.state.sigmaText;
    grid[row][col] = value === null ? NaN : value;
    textGrid[row][col] = value === null ? "" : String(value);
    this.inputsChanged();
  }

  /** Exports the verbatim imported cells, so import -> export is byte-stable. */
  exportCsv(): { mu: string; sigma: string } {
    const mu = serializeMatrixCsv(this.state.algorithms, this.state.benchmarks, this.state.muText);
    const sigma = serializeMatrixCsv(this.state.algorithms, this.state.benchmarks, this.state.sigmaText);
    return { mu, sigma };
  }

  // --- service calls ---------------------------------------------------------

  private buildRequest(): RankRequest {
    return {
      algorithms: this.state.algorithms,
      benchmarks: this.state.benchmarks,
      mu: this.state.mu,
      sigma: this.state.sigma,
      weights: { w_mu: this.state.wMu },
      direction: this.state.direction,
      method: this.state.method,
    };
  }

  private submittable(): boolean {
    return (
      this.hasData() &&
      !hasCellErrors(this.el("#mu-grid")) &&
      !hasCellErrors(this.el("#sigma-grid")) &&
      this.state.mu.every((row) => row.every((v) => !Number.isNaN(v))) &&
      this.state.sigma.every((row) => row.every((v) => !Number.isNaN(v)))
    );
  }

  async rankNow(): Promise<void> {
    if (!this.submittable()) return;
    const revision = this.state.revision;
    try {
      const response = await this.client.rank(this.buildRequest());
      if (!adoptRank(this.state, response, revision)) return; // stale
      renderBarChart(this.el("#chart"), response);
      this.el("#chart").classList.remove("stale");
      this.hideBanner();
    } catch (err) {
      if (err instanceof SupersededError) return;
      // keep the last good chart; surface the problem without blocking
      this.showBanner(err instanceof ApiError ? err.message : String(err));
    }
  }

  async sweepNow(): Promise<void> {
    if (!this.submittable()) return;
    const revision = this.state.revision;
    try {
      const response = await this.client.sweep({ ...this.buildRequest(), grid: SWEEP_GRID });
      if (!adoptSweep(this.state, response, revision)) return;
      renderSweepTable(this.el("#sweep"), response, (wMu) => this.setSlider(wMu));
    } catch (err) {
      if (err instanceof SupersededError) return;
      this.showBanner(err instanceof ApiError ? err.message : String(err));
    }
  }

  setSlider(wMu: number): void {
    const slider = this.el<HTMLInputElement>("#w-mu");
    slider.value = String(wMu);
    this.state.wMu = wMu;
    this.el("#w-mu-value").textContent = wMu.toFixed(2);
    this.inputsChanged();
  }

  // --- banners ----------------------------------------------------------------

  private showBanner(message: string): void {
    const banner = this.el("#banner");
    banner.textContent = message;
    banner.classList.remove("hidden");
  }

  private hideBanner(): void {
    this.el("#banner").classList.add("hidden");
  }

  /** Current on-screen bar order (delegates to the chart DOM, no re-sorting). */
  displayedOrder(): string[] {
    return chartOrder(this.el("#chart"));
  }
}

export function initApp(root: HTMLElement, baseUrl = ""): App {
  return new App(root, new ApiClient(baseUrl));
}
