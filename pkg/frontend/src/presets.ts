/**
 * The two bundled case studies, embedded as CSV text so loading a preset
 * exercises the same parser as a file upload.
 *
 * case1: classification accuracy (benefit); case2: error rate (cost).
 */

import type { Direction } from "./api.js";

export interface Preset {
  label: string;
  direction: Direction;
  muCsv: string;
  sigmaCsv: string;
}

const CASE1_MU = `algorithm,Susy,Higgs,Covtype,DNA,Isolet,Cancer,Cred. Aus,Diabetic,Iris,Spam,Statlog,Wine
FNN,78.14,63.21,75.22,91.36,89.41,94.87,83.05,71.02,95.62,93.61,99.59,95.91
DRBM,76.39,63.4,66.25,93.45,93.74,95.39,82.88,60.48,89.4,90.8,92.08,95.15
ELM,79.39,63.99,76.01,90.59,86.81,95.07,83.38,72.37,94.81,89.43,98.3,91.13
KNN,70.88,59.84,75.81,85.98,88.24,95.23,67.63,61.73,95.55,72.75,98.73,67.92
AVG,78.38,64.01,71.84,92.18,93.73,95.38,83.14,68.84,95.11,93.4,98.73,96.16
MV,78.14,63.75,75.75,92.64,93.93,94.93,83.15,70.05,95.62,92.02,99.32,95.22
CHO,78.58,64.7,76.85,93.69,93.75,95.57,83.52,71.42,95.7,93.78,98.73,97.18`;

const CASE1_SIGMA = `algorithm,Susy,Higgs,Covtype,DNA,Isolet,Cancer,Cred. Aus,Diabetic,Iris,Spam,Statlog,Wine
FNN,0.65,1.19,1.09,1.34,1.7,0.62,1.07,2.31,1.36,0.8,0.06,2.16
DRBM,0.32,0.3,0.17,0.07,0.16,0.28,0.8,1.69,0.95,0.56,0.04,1.28
ELM,0.29,0.09,0.11,0.75,0.6,0.5,0.81,1.09,1.96,0.57,0.08,2.8
KNN,0,0,0,0,0,0,0,0,0,0,0,0
AVG,0.59,0.96,0.42,0.92,0.26,0.35,0.55,3.03,1.47,0.61,0.01,1.44
MV,0.54,0.64,0.24,0.57,0.31,0.42,0.98,2.24,1.42,0.37,0.04,1.76
CHO,0.51,0.72,0.29,0.38,0.16,0.35,0.85,0.97,1.29,0.65,0.01,1.34`;

const CASE2_MU = `algorithm,B1,B2,B3,B4,B5,B6,B7,B8,B9,B10
KNN,3.49,3.35,25.83,19.42,30.82,14.10,4.40,3.94,18.96,29.84
FKNN,3.49,3.13,26.28,15.96,30.45,14.10,4.53,2.40,19.04,30.50
EKNN,2.26,2.96,25.76,10.77,30.71,14.10,5.07,3.90,19.19,31.16
LNC,2.70,2.35,24.85,11.11,31.59,11.90,4.27,2.00,19.41,26.84
LPC,2.60,2.68,25.03,12.36,32.0,11.90,4.00,2.10,19.04,27.10
HKNN,2.04,2.57,25.31,11.44,29.63,11.81,4.00,1.98,20.44,24.64
ALH,2.48,3.07,29.92,11.62,31.37,10.86,4.67,2.00,22.30,26.72
REC,1.58,2.13,24.35,6.10,28.48,10.76,4.00,0.79,18.52,24.40`;

const CASE2_SIGMA = `algorithm,B1,B2,B3,B4,B5,B6,B7,B8,B9,B10
KNN,0.49,0.39,0.70,0.79,1.40,1.60,0.60,0.37,1.71,0.55
FKNN,0.24,0.30,0.61,0.68,1.82,1.04,0.56,0.36,0.93,1.03
EKNN,0.56,0.57,1.01,1.25,0.51,1.24,0.37,0.32,1.21,1.40
LNC,0.45,0.47,0.86,1.05,1.84,1.47,0.76,0.24,1.90,1.08
LPC,0.49,0.58,0.68,0.59,1.83,1.21,0.82,0.31,1.00,0.40
HKNN,0.84,0.73,0.83,0.55,2.34,1.66,0.82,0.49,1.29,1.28
ALH,0.51,0.44,0.88,0.79,2.36,1.28,0.94,0.32,1.27,1.20
REC,0.46,0.32,0.75,0.43,1.20,0.93,0.00,0.13,0.74,0.90`;

export const PRESETS: Record<string, Preset> = {
  case1: {
    label: "Case study I (accuracy, 7 classifiers)",
    direction: "benefit",
    muCsv: CASE1_MU,
    sigmaCsv: CASE1_SIGMA,
  },
  case2: {
    label: "Case study II (error rate, 8 classifiers)",
    direction: "cost",
    muCsv: CASE2_MU,
    sigmaCsv: CASE2_SIGMA,
  },
};
